#include "sccay/cayley.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace sccay {

namespace {

std::string describe(const std::vector<ConnectionSetViolation>& violations) {
  std::string msg = "invalid connection set:";
  for (const auto& v : violations) {
    if (v.kind == ConnectionSetViolation::Kind::kIdentity) {
      msg += " identity (" + format_element(v.element) + ") present;";
    } else {
      msg += " (" + format_element(v.element) + ") present but inverse (" + format_element(v.missing) +
             ") absent;";
    }
  }
  msg.pop_back();
  return msg;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

InvalidConnectionSet::InvalidConnectionSet(std::vector<ConnectionSetViolation> violations)
    : StructuralError(describe(violations)), violations_(std::move(violations)) {}

std::vector<GroupElement> ConnectionSet::elements() const {
  std::vector<GroupElement> out;
  out.reserve(indices_.size());
  for (int i : indices_) out.push_back(group_.element_at(i));
  return out;
}

bool ConnectionSet::contains_index(int index) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

ConnectionSet connection_set_from_indices(const AbelianGroup& group, std::vector<int> indices) {
  for (int i : indices) {
    if (i < 0 || i >= group.order()) throw StructuralError("connection set index out of range");
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  std::vector<ConnectionSetViolation> violations;
  for (int i : indices) {
    if (i == 0) {
      violations.push_back({ConnectionSetViolation::Kind::kIdentity, group.identity(), {}});
      continue;
    }
    const int inv = group.neg_index(i);
    if (!std::binary_search(indices.begin(), indices.end(), inv)) {
      violations.push_back(
          {ConnectionSetViolation::Kind::kMissingInverse, group.element_at(i), group.element_at(inv)});
    }
  }
  if (!violations.empty()) throw InvalidConnectionSet(std::move(violations));
  return ConnectionSet(group, std::move(indices));
}

ConnectionSet validate_connection_set(const AbelianGroup& group, std::span<const GroupElement> elements) {
  std::vector<int> indices;
  indices.reserve(elements.size());
  for (const auto& g : elements) indices.push_back(group.index_of(g));
  return connection_set_from_indices(group, std::move(indices));
}

DenseGraph build_cayley(const ConnectionSet& s) {
  const AbelianGroup& g = s.group();
  const int n = g.order();
  if (n > DenseGraph::kMaxVertices) {
    throw StructuralError("Cayley graph on " + std::to_string(n) + " vertices exceeds dense budget");
  }
  GraphBuilder b(n);
  for (int j = 0; j < n; ++j) {
    for (int x : s.indices()) {
      const int i = g.add_index(j, x);  // g_i - g_j = x
      if (i > j) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

ConnectionSet complement_connection_set(const ConnectionSet& s) {
  std::vector<int> out;
  for (int i = 1; i < s.group().order(); ++i) {
    if (!s.contains_index(i)) out.push_back(i);
  }
  return connection_set_from_indices(s.group(), std::move(out));
}

bool is_connected_cayley(const ConnectionSet& s) {
  return static_cast<int>(s.group().generated_subgroup(s.indices()).size()) == s.group().order();
}

ConnectionSet lex_product(const ConnectionSet& s1, const ConnectionSet& s2) {
  const AbelianGroup product = AbelianGroup::direct_product(s1.group(), s2.group());
  const int n2 = s2.group().order();
  std::vector<int> out;
  for (int a : s1.indices()) {
    for (int g = 0; g < n2; ++g) out.push_back(a * n2 + g);
  }
  for (int x : s2.indices()) out.push_back(x);  // (e, x)
  return connection_set_from_indices(product, std::move(out));
}

std::string format_connection_set(const ConnectionSet& s) {
  std::string out = "group " + s.group().name() + "\n";
  for (int i : s.indices()) out += format_element(s.group().element_at(i)) + "\n";
  return out;
}

ConnectionSet parse_connection_set(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<AbelianGroup> group;
  std::vector<GroupElement> elements;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view l = trim(line);
    if (l.empty()) continue;
    if (!group) {
      if (l.substr(0, 6) != "group ") {
        throw ParseError("connection-set file line " + std::to_string(lineno) + ": expected 'group <G>' header");
      }
      group = AbelianGroup::parse(l.substr(6));
      continue;
    }
    elements.push_back(parse_element(*group, l));
  }
  if (!group) throw ParseError("connection-set file: missing 'group' header");
  return validate_connection_set(*group, elements);
}

ConnectionSet parse_inline_connection_set(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("inline connection set must look like 'Z5:1;4'");
  AbelianGroup group = AbelianGroup::parse(text.substr(0, colon));
  std::vector<GroupElement> elements;
  std::string_view rest = text.substr(colon + 1);
  while (!trim(rest).empty()) {
    const auto semi = rest.find(';');
    elements.push_back(parse_element(group, rest.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    rest.remove_prefix(semi + 1);
  }
  return validate_connection_set(group, elements);
}

}  // namespace sccay
