#include "report.hpp"

namespace sccay::report {

namespace {

Json witness_json(const CoefficientWitness& w, const AbelianGroup& group) {
  return Json{{"element", format_element(w.element)},
              {"index", group.index_of(w.element)},
              {"observed", w.observed},
              {"expected", w.expected}};
}

}  // namespace

Json to_json(const SrgParams& p) {
  Json j{{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}, {"beta", p.beta()}, {"delta", p.delta()}};
  if (auto t = p.conference_t()) j["conference_t"] = *t;
  const Eigenvalues ev = p.eigenvalues();
  j["eigenvalues"] = Json{{"k", ev.k}, {"beta", ev.beta}, {"delta", ev.delta}, {"rational", ev.sqrt_delta.has_value()}};
  return j;
}

Json to_json(const SrgCheck& c) {
  Json j{{"passed", c.ok()}};
  if (c.ok()) {
    j["params"] = to_json(*c.params);
  } else {
    j["reason"] = to_string(c.failure);
    if (c.witness.u >= 0) {
      j["witness"] = Json{{"u", c.witness.u},
                          {"v", c.witness.v},
                          {"observed", c.witness.observed},
                          {"expected", c.witness.expected}};
    }
  }
  return j;
}

Json to_json(const DrCheck& c) {
  Json j{{"passed", c.ok()}};
  if (c.ok()) {
    j["diameter"] = c.array->diameter;
    j["b"] = c.array->b;
    j["c"] = c.array->c;
    j["array"] = to_string(*c.array);
  } else {
    j["reason"] = c.reason;
    j["witness"] = Json{{"base", c.base},
                        {"vertex", c.vertex},
                        {"distance", c.distance},
                        {"observed", c.observed},
                        {"expected", c.expected}};
  }
  return j;
}

Json to_json(const InvariantCounts& c) {
  Json degrees = Json::array();
  for (const auto& [d, count] : c.degree_multiset) degrees.push_back(Json::array({d, count}));
  return Json{{"triangles", c.triangles}, {"four_cliques", c.four_cliques}, {"degree_multiset", degrees}};
}

Json to_json(const IdentityCheck& c, const AbelianGroup& group) {
  Json j{{"passed", c.holds}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.witness) j["witness"] = witness_json(*c.witness, group);
  return j;
}

Json to_json(const SchurCheck& c, const AbelianGroup& group) {
  Json j{{"passed", c.closed}};
  if (c.closed) j["structure_constants"] = c.structure;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.witness) j["witness"] = witness_json(*c.witness, group);
  return j;
}

Json to_json(const IsoResult& r, const AbelianGroup* group, bool timings) {
  Json cert{{"kind", to_string(r.certificate.kind)}};
  switch (r.certificate.kind) {
    case IsoCertificate::Kind::kGroupAutomorphism: {
      Json images = Json::array();
      for (const auto& g : r.certificate.automorphism->generator_images) images.push_back(format_element(g));
      cert["generator_images"] = images;
      if (group) cert["group"] = group->name();
      cert["permutation"] = r.certificate.permutation;
      cert["automorphisms_scanned"] = r.certificate.stats.nodes;
      break;
    }
    case IsoCertificate::Kind::kVertexBijection:
      cert["permutation"] = r.certificate.permutation;
      cert["nodes"] = r.certificate.stats.nodes;
      break;
    case IsoCertificate::Kind::kInvariantRefutation:
      cert["invariant"] = r.certificate.invariant;
      cert["left"] = r.certificate.left_value;
      cert["right"] = r.certificate.right_value;
      break;
    case IsoCertificate::Kind::kSearchExhausted:
    case IsoCertificate::Kind::kUndecided:
      cert["nodes"] = r.certificate.stats.nodes;
      break;
  }
  if (timings) cert["elapsed_seconds"] = r.certificate.stats.elapsed_seconds;
  return Json{{"passed", r.isomorphic()},
              {"outcome", to_string(r.outcome)},
              {"decided", r.decided()},
              {"decided_by", r.decided_by},
              {"certificate", cert},
              {"notes", r.notes}};
}

Json to_json(const ConstructionReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  Json set = Json::array();
  for (const auto& e : r.connection_set.elements()) set.push_back(format_element(e));
  Json j{{"family", r.family},
         {"group", r.group().name()},
         {"order", r.group().order()},
         {"parameters", params},
         {"connection_set_size", r.connection_set.size()},
         {"connection_set", set}};
  if (r.field) {
    j["field"] = Json{{"p", r.field->p},
                      {"r", r.field->r},
                      {"modulus", format_polynomial(r.field->modulus)},
                      {"modulus_coefficients", r.field->modulus},
                      {"primitive_element", format_field_element(r.field->primitive_element)}};
  }
  if (r.davis) {
    Json c = Json::array();
    Json d = Json::array();
    for (const auto& g : r.davis->c_generators) c.push_back(format_element(g));
    for (const auto& g : r.davis->d_generators) d.push_back(format_element(g));
    j["davis"] = Json{{"c_generators", c},
                      {"d_generators", d},
                      {"trailing_range", Json::array({r.davis->trailing_range_first, r.davis->trailing_range_last})},
                      {"c_size", r.davis->c_size},
                      {"d_size", r.davis->d_size},
                      {"reading", r.davis->reading}};
  }
  j["notes"] = r.notes;
  return j;
}

Json to_json(const suite::CriterionResult& r, bool timings) {
  Json j{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"time_limit_seconds", r.time_limit_seconds}};
  if (timings) j["seconds"] = r.seconds;
  j["checks"] = r.checks;
  return j;
}

}  // namespace sccay::report
