#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace singerlab {

/// Prime power factorization, primes ascending.
struct Factorization {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  std::vector<std::uint64_t> primes() const;
};

bool is_prime(std::uint64_t n);

/// Trial division up to 10^6, Pollard rho (Brent) for the remaining cofactor.
Factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// base^exp; throws ContractError on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Given a group element of order dividing `bound` (with `bound` factored),
/// returns the exact order by stripping prime factors while `is_identity(x^e)`
/// still holds. `power_is_identity(e)` must report whether x^e = 1.
template <typename PowerIsIdentity>
std::uint64_t order_from_bound(std::uint64_t bound, const Factorization& f,
                               PowerIsIdentity&& power_is_identity) {
  std::uint64_t order = bound;
  for (const auto& [prime, mult] : f.factors) {
    for (unsigned i = 0; i < mult; ++i) {
      if (order % prime == 0 && power_is_identity(order / prime)) {
        order /= prime;
      } else {
        break;
      }
    }
  }
  return order;
}

}  // namespace singerlab

namespace singerlab {

/// factorize() with a process-wide cache; thread-safe. Used for q^n - 1 in
/// primitivity and order computations.
const Factorization& cached_factorization(std::uint64_t n);

}  // namespace singerlab
