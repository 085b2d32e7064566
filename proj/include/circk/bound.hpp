#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace circk {

inline constexpr std::uint64_t kMaterializeExponentLimit = 1'000'000;

// 3(k+1) * 2^e with e = 2^(p^(k+1)) * ((4d)^((k+1)^2) + 1)^(k^2).
struct BigBound {
  mpz_class coefficient;
  mpz_class exponent;
  // Set when exponent <= kMaterializeExponentLimit.
  std::optional<mpz_class> value;
  // floor(log10(coefficient) + exponent * log10(2)) + 1, from an MPFR
  // evaluation independent of `value`.
  mpz_class digits_estimate;
  // Length of value's decimal expansion, when materialized.
  std::optional<std::uint64_t> digits_exact;
};

// Throws PreconditionFailed unless k >= 1, p >= 3, d >= 1, and TooLarge when
// p^(k+1) does not fit in 64 bits.
BigBound girth_bound(int k, int p, int d);

// (k+1) * 2^e, the bound on N before the odd-girth factor; exponent only.
mpz_class order_bound_exponent(int k, int p, int d);

}  // namespace circk
