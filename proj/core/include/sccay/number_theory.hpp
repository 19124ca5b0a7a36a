#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sccay {

bool is_prime(std::int64_t m);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m);

/// If m = p^e with p prime and e >= 1, returns (p, e); otherwise (0, 0).
std::pair<std::int64_t, int> prime_power(std::int64_t m);

/// Exact integer r-th root if one exists, else -1.
std::int64_t exact_root(std::int64_t m, int r);

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t mod);

}  // namespace sccay
