#include "sccay/number_theory.hpp"

#include <stdexcept>

namespace sccay {

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::int64_t d = 3; d * d <= m; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m) {
  std::vector<std::pair<std::int64_t, int>> out;
  if (m < 2) return out;
  for (std::int64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (m % d != 0) continue;
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::pair<std::int64_t, int> prime_power(std::int64_t m) {
  auto f = factorize(m);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

std::int64_t exact_root(std::int64_t m, int r) {
  if (m < 0 || r < 1) return -1;
  if (m < 2) return m;
  std::int64_t lo = 1;
  std::int64_t hi = m;
  while (lo <= hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    // mid^r compared with m, bailing out before overflow.
    std::int64_t acc = 1;
    bool over = false;
    for (int i = 0; i < r; ++i) {
      if (acc > m / mid) {
        over = true;
        break;
      }
      acc *= mid;
    }
    if (!over && acc == m) return mid;
    if (over || acc > m) {
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  return -1;
}

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t mod) {
  if (mod <= 0 || mod > (std::int64_t{1} << 32)) {
    throw std::invalid_argument("mod_pow: modulus must be in 1..2^32");
  }
  std::uint64_t result = 1 % mod;
  std::uint64_t b = static_cast<std::uint64_t>(((base % mod) + mod) % mod);
  const auto m = static_cast<std::uint64_t>(mod);
  while (exp > 0) {
    if (exp & 1U) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1U;
  }
  return static_cast<std::int64_t>(result);
}

}  // namespace sccay
