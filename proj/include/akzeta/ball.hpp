#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "akzeta/rational.hpp"

namespace akzeta {

struct eval_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Midpoint-radius interval on MPFR: the true value of an expression lies in
// [mid - rad, mid + rad]. Midpoints carry the working precision; radii live
// at a small fixed precision and are always rounded upward, so every
// operation is outward. Binary operations take the larger operand precision.
class RealBall {
 public:
  RealBall() : RealBall(64) {}
  explicit RealBall(mpfr_prec_t prec);
  RealBall(const RealBall& o);
  RealBall(RealBall&& o) noexcept;
  RealBall& operator=(const RealBall& o);
  RealBall& operator=(RealBall&& o) noexcept;
  ~RealBall();

  static RealBall exact(long v, mpfr_prec_t prec);
  static RealBall exact(const Integer& v, mpfr_prec_t prec);
  static RealBall of_rational(const Rational& q, mpfr_prec_t prec);
  static RealBall of_double(double x, mpfr_prec_t prec);
  static RealBall pi(mpfr_prec_t prec);
  // Riemann zeta at an integer argument >= 2, straight from the library.
  static RealBall riemann_zeta(unsigned long m, mpfr_prec_t prec);
  // 10^e as a ball (exact for e >= 0).
  static RealBall pow10(long e, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }
  bool is_zero_exact() const;
  bool contains_zero() const;
  bool overlaps(const RealBall& o) const;
  // True iff |mid| <= bound + rad, with |mid| rounded up and rad rounded
  // down to doubles: a conservative "deviation within tolerance" test.
  bool dev_within(double bound) const;
  // True iff |mid| + rad <= bound (whole ball within bound of zero).
  bool mag_le(double bound) const;

  double mid_double() const;
  double rad_double() const;
  int mid_sign() const;
  // Whole ball inside [0, inf)?
  bool surely_nonneg() const;
  // Decimal midpoint with the given significant digits (round-to-nearest);
  // digits >= ceil(prec*log10(2)) + 2 round-trips bit-exactly.
  std::string mid_decimal(size_t digits) const;
  std::string rad_decimal() const;
  std::string to_string(size_t digits = 20) const;

  // Parse decimal strings; the midpoint is read to `prec` bits (RNDN), the
  // radius upward. When the midpoint string carries decimal_digits_for(prec)
  // significant digits written from a prec-bit value, the parse recovers
  // that value exactly, so the radius needs no inflation and put/get
  // round-trips are bit-exact.
  static RealBall from_decimal(const std::string& mid, const std::string& rad,
                               mpfr_prec_t prec);
  static size_t decimal_digits_for(mpfr_prec_t prec);

  RealBall& operator+=(const RealBall& o);
  RealBall& operator-=(const RealBall& o);
  RealBall& operator*=(const RealBall& o);
  RealBall& operator/=(const RealBall& o);
  friend RealBall operator+(RealBall a, const RealBall& b) { return a += b; }
  friend RealBall operator-(RealBall a, const RealBall& b) { return a -= b; }
  friend RealBall operator*(RealBall a, const RealBall& b) { return a *= b; }
  friend RealBall operator/(RealBall a, const RealBall& b) { return a /= b; }
  RealBall operator-() const;

  RealBall& mul_2exp(long e);  // exact scaling by 2^e
  RealBall& neg();
  RealBall& mul_ui(unsigned long n);
  RealBall& div_ui(unsigned long n);

  // Enlarge the radius by 2^e, or by an upper bound of |b|.
  void add_error_2exp(long e);
  void add_error(const RealBall& b);

  // Round the midpoint to p bits, absorbing the rounding into the radius.
  void round_to(mpfr_prec_t p);

  // radius <= 2^{1-p} * max(1, |mid|)?  The return-value contract for
  // evaluations requested at p bits.
  bool meets_precision(mpfr_prec_t p) const;

  friend RealBall log(const RealBall& b);
  friend RealBall exp(const RealBall& b);
  friend RealBall sqrt(const RealBall& b);
  friend RealBall recip(const RealBall& b);
  friend RealBall pow_ui(const RealBall& b, unsigned long n);
  friend RealBall abs_ball(const RealBall& b);

 private:
  void absorb_ternary(int t);  // add half-ulp of mid_ when t != 0
  mpfr_t mid_;
  mpfr_t rad_;
};

RealBall log(const RealBall& b);
RealBall exp(const RealBall& b);
RealBall sqrt(const RealBall& b);
RealBall recip(const RealBall& b);
RealBall pow_ui(const RealBall& b, unsigned long n);
RealBall abs_ball(const RealBall& b);

}  // namespace akzeta
