#include "sccay/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "sccay/error.hpp"
#include "sccay/number_theory.hpp"

namespace sccay {

namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) { return static_cast<int>(mod_pow(a, static_cast<std::uint64_t>(p - 2), p)); }

// Remainder and quotient of a / b over Z_p, b nonzero (trimmed).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inv_mod(b.back(), p);
  Poly quot;
  if (static_cast<int>(a.size()) - 1 >= db) quot.assign(a.size() - b.size() + 1, 0);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int c = a.back() * lead_inv % p;
    quot[shift] = c;
    for (int j = 0; j <= db; ++j) {
      a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
    }
    trim(a);
  }
  return {quot, a};
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b, int p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    out[i] = ((x - y) % p + p) % p;
  }
  trim(out);
  return out;
}

// Monic polynomial of degree d whose low coefficients are the mixed-radix
// digits of k, constant term most significant.
Poly monic_from_index(int p, int d, std::int64_t k) {
  Poly out(static_cast<std::size_t>(d) + 1, 0);
  for (int i = d - 1; i >= 0; --i) {
    out[i] = static_cast<int>(k % p);
    k /= p;
  }
  out[d] = 1;
  return out;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

bool is_irreducible(int p, std::span<const int> monic_poly) {
  Poly f(monic_poly.begin(), monic_poly.end());
  trim(f);
  const int d = static_cast<int>(f.size()) - 1;
  if (d < 1) return false;
  for (int e = 1; e <= d / 2; ++e) {
    const std::int64_t count = ipow(p, e);
    for (std::int64_t k = 0; k < count; ++k) {
      if (divmod(f, monic_from_index(p, e, k), p).second.empty()) return false;
    }
  }
  return true;
}

FiniteField FiniteField::make(int p, int r) {
  if (!is_prime(p)) throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
  if (r < 1) throw ParameterError("field extension degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw ParameterError("field order " + std::to_string(p) + "^" + std::to_string(r) +
                           " exceeds budget " + std::to_string(kMaxOrder));
    }
  }
  for (std::int64_t k = 0; k < q; ++k) {
    Poly f = monic_from_index(p, r, k);
    if (is_irreducible(p, f)) return FiniteField(p, std::move(f));
  }
  throw ConstructionError("no irreducible polynomial found");  // unreachable for prime p
}

FiniteField::FiniteField(int p, std::vector<int> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw ParameterError("field characteristic " + std::to_string(p) + " is not prime");
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw ParameterError("field modulus must be monic of degree >= 1");
  }
  for (int c : modulus_) {
    if (c < 0 || c >= p) throw ParameterError("field modulus coefficients must be reduced mod p");
  }
  r_ = static_cast<int>(modulus_.size()) - 1;
  std::int64_t q = ipow(p, r_);
  if (q > kMaxOrder) throw ParameterError("field order exceeds budget " + std::to_string(kMaxOrder));
  q_ = static_cast<int>(q);
  if (!is_irreducible(p, modulus_)) {
    throw ParameterError("field modulus " + format_polynomial(modulus_) + " is reducible over Z_" +
                         std::to_string(p));
  }
}

bool FiniteField::contains(const FieldElement& a) const noexcept {
  if (static_cast<int>(a.coeffs.size()) != r_) return false;
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](int c) { return c >= 0 && c < p_; });
}

void FiniteField::require_member(const FieldElement& a) const {
  if (!contains(a)) {
    throw StructuralError("(" + format_field_element(a) + ") is not an element of GF(" +
                          std::to_string(q_) + ")");
  }
}

FieldElement FiniteField::zero() const { return FieldElement{std::vector<int>(r_, 0)}; }

FieldElement FiniteField::one() const { return from_int(1); }

FieldElement FiniteField::x() const {
  Poly xp{0, 1};
  Poly rem = divmod(xp, modulus_, p_).second;
  FieldElement out = zero();
  std::copy(rem.begin(), rem.end(), out.coeffs.begin());
  return out;
}

FieldElement FiniteField::from_int(std::int64_t c) const {
  FieldElement out = zero();
  out.coeffs[0] = static_cast<int>(((c % p_) + p_) % p_);
  return out;
}

bool FiniteField::is_zero(const FieldElement& a) const {
  require_member(a);
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](int c) { return c == 0; });
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
  require_member(a);
  require_member(b);
  FieldElement out = zero();
  for (int i = 0; i < r_; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return out;
}

FieldElement FiniteField::neg(const FieldElement& a) const {
  require_member(a);
  FieldElement out = zero();
  for (int i = 0; i < r_; ++i) out.coeffs[i] = (p_ - a.coeffs[i]) % p_;
  return out;
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
  require_member(a);
  require_member(b);
  std::vector<int> prod(static_cast<std::size_t>(2 * r_ - 1), 0);
  for (int i = 0; i < r_; ++i) {
    if (!a.coeffs[i]) continue;
    for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % p_;
  }
  // modulus is monic: x^r = -(m_0 + ... + m_{r-1} x^{r-1}).
  for (int i = 2 * r_ - 2; i >= r_; --i) {
    const int c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (int j = 0; j < r_; ++j) {
      prod[i - r_ + j] = ((prod[i - r_ + j] - c * modulus_[j]) % p_ + p_) % p_;
    }
  }
  prod.resize(static_cast<std::size_t>(r_));
  return FieldElement{std::move(prod)};
}

FieldElement FiniteField::pow(const FieldElement& a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

FieldElement FiniteField::inverse(const FieldElement& a) const {
  if (is_zero(a)) throw ParameterError("inverse of zero in GF(" + std::to_string(q_) + ")");
  // Invariant: s_i * a == r_i (mod modulus).
  Poly r0 = modulus_;
  Poly r1 = a.coeffs;
  trim(r1);
  Poly s0;
  Poly s1{1};
  while (r1.size() > 1) {
    auto [quot, rem] = divmod(r0, r1, p_);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since the modulus is irreducible.
  const int c = inv_mod(r1.at(0), p_);
  Poly inv = divmod(s1, modulus_, p_).second;
  FieldElement out = zero();
  for (std::size_t i = 0; i < inv.size(); ++i) out.coeffs[i] = inv[i] * c % p_;
  return out;
}

int FiniteField::index_of(const FieldElement& a) const {
  require_member(a);
  int index = 0;
  for (int i = 0; i < r_; ++i) index = index * p_ + a.coeffs[i];
  return index;
}

FieldElement FiniteField::element_at(int index) const {
  if (index < 0 || index >= q_) throw StructuralError("field element index out of range");
  FieldElement out = zero();
  for (int i = r_ - 1; i >= 0; --i) {
    out.coeffs[i] = index % p_;
    index /= p_;
  }
  return out;
}

std::vector<FieldElement> FiniteField::elements() const {
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(q_));
  for (int i = 0; i < q_; ++i) out.push_back(element_at(i));
  return out;
}

int FiniteField::multiplicative_order(const FieldElement& a) const {
  if (is_zero(a)) throw ParameterError("multiplicative order of zero is undefined");
  std::int64_t order = q_ - 1;
  for (auto [prime, e] : factorize(q_ - 1)) {
    for (int i = 0; i < e; ++i) {
      if (pow(a, static_cast<std::uint64_t>(order / prime)) != one()) break;
      order /= prime;
    }
  }
  return static_cast<int>(order);
}

FieldElement FiniteField::primitive_element() const {
  for (int i = 1; i < q_; ++i) {
    FieldElement a = element_at(i);
    if (multiplicative_order(a) == q_ - 1) return a;
  }
  throw ConstructionError("no primitive element found");  // unreachable for a field
}

std::vector<FieldElement> FiniteField::squares() const {
  std::vector<int> idx;
  for (int i = 1; i < q_; ++i) {
    FieldElement a = element_at(i);
    idx.push_back(index_of(mul(a, a)));
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<FieldElement> out;
  for (int i : idx) out.push_back(element_at(i));
  return out;
}

std::vector<FieldElement> FiniteField::peisert_set(const std::optional<FieldElement>& generator) const {
  if (p_ % 4 != 3) {
    throw ParameterError("Peisert set requires p = 3 mod 4, got p = " + std::to_string(p_));
  }
  if (r_ % 2 != 0) {
    throw ParameterError("Peisert set requires even extension degree r, got r = " + std::to_string(r_));
  }
  FieldElement a = generator ? *generator : primitive_element();
  require_member(a);
  if (is_zero(a) || multiplicative_order(a) != q_ - 1) {
    throw ParameterError("Peisert generator (" + format_field_element(a) + ") is not primitive");
  }
  std::vector<int> idx;
  FieldElement power = one();
  for (int i = 0; i < q_ - 1; ++i) {
    if (i % 4 == 0 || i % 4 == 1) idx.push_back(index_of(power));
    power = mul(power, a);
  }
  std::sort(idx.begin(), idx.end());
  std::vector<FieldElement> out;
  for (int i : idx) out.push_back(element_at(i));
  return out;
}

AbelianGroup FiniteField::additive_group() const { return AbelianGroup::elementary(p_, r_); }

GroupElement FiniteField::to_group(const FieldElement& a) const {
  require_member(a);
  return GroupElement{a.coeffs};
}

FieldElement FiniteField::from_group(const GroupElement& g) const {
  additive_group().require_member(g);
  return FieldElement{g.residues};
}

std::string format_field_element(const FieldElement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a.coeffs[i]);
  }
  return out;
}

FieldElement parse_field_element(const FiniteField& field, const std::string& text) {
  FieldElement a;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      a.coeffs.push_back(std::stoi(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ParseError("invalid field element coefficient '" + part + "'");
    }
  }
  if (!field.contains(a)) {
    throw ParseError("'" + text + "' is not a coefficient tuple of GF(" +
                     std::to_string(field.order()) + ")");
  }
  return a;
}

std::string format_polynomial(std::span<const int> coeffs) {
  std::string out;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const int c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace sccay
