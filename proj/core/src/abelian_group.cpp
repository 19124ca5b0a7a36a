#include "sccay/abelian_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "sccay/error.hpp"

namespace sccay {

namespace {

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 30;

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw StructuralError("abelian group needs at least one cyclic factor");
  std::int64_t order = 1;
  for (int n : factors_) {
    if (n < 2) throw StructuralError("cyclic factor modulus must be >= 2, got " + std::to_string(n));
    order *= n;
    if (order > kMaxOrder) throw StructuralError("group order too large");
  }
  order_ = static_cast<int>(order);
  strides_.assign(factors_.size(), 1);
  for (int i = rank() - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * factors_[i + 1];
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty group description");
  std::vector<int> factors;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.size();
    for (std::size_t i = pos; i < text.size(); ++i) {
      if (text[i] == 'x' || text[i] == 'X') {
        next = i;
        break;
      }
    }
    std::string_view part = trim(text.substr(pos, next - pos));
    if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'z')) {
      throw ParseError("group factor must look like Z<n>: '" + std::string(part) + "'");
    }
    factors.push_back(parse_int(part.substr(1), "cyclic modulus"));
    if (next == text.size()) break;
    pos = next + 1;
  }
  try {
    return AbelianGroup(std::move(factors));
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

AbelianGroup AbelianGroup::elementary(int p, int r) {
  return AbelianGroup(std::vector<int>(static_cast<std::size_t>(r), p));
}

AbelianGroup AbelianGroup::direct_product(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<int> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return AbelianGroup(std::move(f));
}

std::string AbelianGroup::name() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(factors_[i]);
  }
  return out;
}

bool AbelianGroup::contains(const GroupElement& g) const noexcept {
  if (g.residues.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g.residues[i] < 0 || g.residues[i] >= factors_[i]) return false;
  }
  return true;
}

void AbelianGroup::require_member(const GroupElement& g) const {
  if (g.residues.size() != factors_.size()) {
    throw StructuralError("element (" + format_element(g) + ") has arity " +
                          std::to_string(g.residues.size()) + ", group " + name() +
                          " expects " + std::to_string(factors_.size()));
  }
  if (!contains(g)) {
    throw StructuralError("element (" + format_element(g) + ") is not reduced for " + name());
  }
}

GroupElement AbelianGroup::identity() const {
  return GroupElement{std::vector<int>(factors_.size(), 0)};
}

GroupElement AbelianGroup::add(const GroupElement& g, const GroupElement& h) const {
  require_member(g);
  require_member(h);
  GroupElement out{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out.residues[i] = (g.residues[i] + h.residues[i]) % factors_[i];
  }
  return out;
}

GroupElement AbelianGroup::neg(const GroupElement& g) const {
  require_member(g);
  GroupElement out{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out.residues[i] = (factors_[i] - g.residues[i]) % factors_[i];
  }
  return out;
}

GroupElement AbelianGroup::sub(const GroupElement& g, const GroupElement& h) const {
  return add(g, neg(h));
}

GroupElement AbelianGroup::multiple(const GroupElement& g, std::int64_t m) const {
  require_member(g);
  GroupElement out{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::int64_t n = factors_[i];
    std::int64_t r = (static_cast<std::int64_t>(g.residues[i]) * (m % n)) % n;
    out.residues[i] = static_cast<int>((r + n) % n);
  }
  return out;
}

int AbelianGroup::element_order(const GroupElement& g) const {
  require_member(g);
  int order = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int component = factors_[i] / std::gcd(factors_[i], g.residues[i]);
    order = std::lcm(order, component);
  }
  return order;
}

int AbelianGroup::index_of(const GroupElement& g) const {
  require_member(g);
  int index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) index += g.residues[i] * strides_[i];
  return index;
}

GroupElement AbelianGroup::element_at(int index) const {
  if (index < 0 || index >= order_) {
    throw StructuralError("element index " + std::to_string(index) + " out of range for " + name());
  }
  GroupElement out{std::vector<int>(factors_.size())};
  for (int i = 0; i < rank(); ++i) out.residues[i] = residue_of_index(index, i);
  return out;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

int AbelianGroup::add_index(int a, int b) const noexcept {
  int out = 0;
  for (int i = 0; i < rank(); ++i) {
    int r = residue_of_index(a, i) + residue_of_index(b, i);
    if (r >= factors_[i]) r -= factors_[i];
    out += r * strides_[i];
  }
  return out;
}

int AbelianGroup::neg_index(int a) const noexcept {
  int out = 0;
  for (int i = 0; i < rank(); ++i) {
    int r = residue_of_index(a, i);
    out += (r == 0 ? 0 : factors_[i] - r) * strides_[i];
  }
  return out;
}

int AbelianGroup::sub_index(int a, int b) const noexcept {
  int out = 0;
  for (int i = 0; i < rank(); ++i) {
    int r = residue_of_index(a, i) - residue_of_index(b, i);
    if (r < 0) r += factors_[i];
    out += r * strides_[i];
  }
  return out;
}

std::vector<GroupElement> AbelianGroup::cyclic_subgroup(const GroupElement& g) const {
  require_member(g);
  std::vector<GroupElement> out;
  GroupElement x = identity();
  do {
    out.push_back(x);
    x = add(x, g);
  } while (x != identity());
  return out;
}

std::vector<int> AbelianGroup::generated_subgroup(std::span<const int> generators) const {
  std::vector<char> in(static_cast<std::size_t>(order_), 0);
  std::vector<int> frontier{0};
  in[0] = 1;
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int s : generators) {
      int y = add_index(x, s);
      if (!in[y]) {
        in[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < order_; ++i) {
    if (in[i]) out.push_back(i);
  }
  return out;
}

std::string format_element(const GroupElement& g) {
  std::string out;
  for (std::size_t i = 0; i < g.residues.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.residues[i]);
  }
  return out;
}

GroupElement parse_element(const AbelianGroup& group, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  GroupElement g;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
    g.residues.push_back(parse_int(part, "residue"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (!group.contains(g)) {
    throw ParseError("element (" + std::string(text) + ") is not a reduced element of " + group.name());
  }
  return g;
}

}  // namespace sccay
