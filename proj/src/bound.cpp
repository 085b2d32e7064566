#include "circk/bound.hpp"

#include <mpfr.h>

#include <string>

#include "circk/errors.hpp"

namespace circk {

namespace {

mpz_class pow_ui(const mpz_class& base, unsigned long exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

mpz_class log_digits(const mpz_class& coefficient, const mpz_class& exponent) {
  // Precision covers the exponent's bits plus a margin for the fraction.
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(mpz_sizeinbase(exponent.get_mpz_t(), 2)) + 128;
  mpfr_t lc, l2, e, acc;
  mpfr_inits2(prec, lc, l2, e, acc, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(lc, coefficient.get_mpz_t(), MPFR_RNDN);
  mpfr_log10(lc, lc, MPFR_RNDN);
  mpfr_set_ui(l2, 2, MPFR_RNDN);
  mpfr_log10(l2, l2, MPFR_RNDN);
  mpfr_set_z(e, exponent.get_mpz_t(), MPFR_RNDN);
  mpfr_mul(acc, e, l2, MPFR_RNDN);
  mpfr_add(acc, acc, lc, MPFR_RNDN);
  mpfr_floor(acc, acc);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), acc, MPFR_RNDZ);
  mpfr_clears(lc, l2, e, acc, static_cast<mpfr_ptr>(nullptr));
  return out + 1;
}

}  // namespace

mpz_class order_bound_exponent(int k, int p, int d) {
  if (k < 1 || p < 3 || d < 1) throw PreconditionFailed("girth_bound needs k >= 1, p >= 3, d >= 1");
  const mpz_class colorings = pow_ui(mpz_class(p), static_cast<unsigned long>(k + 1));
  if (!colorings.fits_ulong_p()) throw TooLarge("p^(k+1) does not fit in 64 bits");
  const mpz_class types = pow_ui(mpz_class(4 * d), static_cast<unsigned long>((k + 1) * (k + 1))) + 1;
  return pow_ui(mpz_class(2), colorings.get_ui()) * pow_ui(types, static_cast<unsigned long>(k * k));
}

BigBound girth_bound(int k, int p, int d) {
  BigBound b;
  b.exponent = order_bound_exponent(k, p, d);
  b.coefficient = 3 * (k + 1);
  b.digits_estimate = log_digits(b.coefficient, b.exponent);
  if (b.exponent <= kMaterializeExponentLimit) {
    mpz_class value;
    mpz_mul_2exp(value.get_mpz_t(), b.coefficient.get_mpz_t(), b.exponent.get_ui());
    b.digits_exact = value.get_str(10).size();
    b.value = std::move(value);
  }
  return b;
}

}  // namespace circk
