#include "akzeta/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace akzeta {

namespace {

constexpr mpfr_prec_t kRadPrec = 32;

// Reusable radius-precision scratch registers. Slot 0 belongs to
// rad_add_2exp alone; slots 1..3 serve one public operation at a time
// (none of which call each other while a slot is live).
struct RadScratch {
  mpfr_t t[4];
  RadScratch() {
    for (auto& x : t) mpfr_init2(x, kRadPrec);
  }
  ~RadScratch() {
    for (auto& x : t) mpfr_clear(x);
  }
};

mpfr_ptr rad_scratch(int slot) {
  static thread_local RadScratch s;
  return s.t[slot];
}

// rad += 2^e, upward.
void rad_add_2exp(mpfr_t rad, mpfr_exp_t e) {
  mpfr_ptr t = rad_scratch(0);
  mpfr_set_ui_2exp(t, 1, e, MPFR_RNDU);
  mpfr_add(rad, rad, t, MPFR_RNDU);
}

}  // namespace

RealBall::RealBall(mpfr_prec_t prec) {
  mpfr_init2(mid_, std::max<mpfr_prec_t>(prec, 16));
  mpfr_set_zero(mid_, 1);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(rad_, 1);
}

RealBall::RealBall(const RealBall& o) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

RealBall::RealBall(RealBall&& o) noexcept {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_swap(mid_, o.mid_);
  mpfr_init2(rad_, kRadPrec);
  mpfr_swap(rad_, o.rad_);
}

RealBall& RealBall::operator=(const RealBall& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
  }
  return *this;
}

RealBall& RealBall::operator=(RealBall&& o) noexcept {
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
  return *this;
}

RealBall::~RealBall() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void RealBall::absorb_ternary(int t) {
  if (t == 0) return;
  if (!mpfr_regular_p(mid_)) throw eval_error("ball: non-finite midpoint");
  rad_add_2exp(rad_, mpfr_get_exp(mid_) - mpfr_get_prec(mid_));
}

RealBall RealBall::exact(long v, mpfr_prec_t prec) {
  RealBall b(prec);
  b.absorb_ternary(mpfr_set_si(b.mid_, v, MPFR_RNDN));
  return b;
}

RealBall RealBall::exact(const Integer& v, mpfr_prec_t prec) {
  RealBall b(prec);
  b.absorb_ternary(mpfr_set_z(b.mid_, v.get_mpz_t(), MPFR_RNDN));
  return b;
}

RealBall RealBall::of_rational(const Rational& q, mpfr_prec_t prec) {
  RealBall b(prec);
  b.absorb_ternary(mpfr_set_q(b.mid_, q.get_mpq_t(), MPFR_RNDN));
  return b;
}

RealBall RealBall::of_double(double x, mpfr_prec_t prec) {
  RealBall b(prec);
  b.absorb_ternary(mpfr_set_d(b.mid_, x, MPFR_RNDN));
  return b;
}

RealBall RealBall::pi(mpfr_prec_t prec) {
  RealBall b(prec);
  b.absorb_ternary(mpfr_const_pi(b.mid_, MPFR_RNDN));
  return b;
}

RealBall RealBall::riemann_zeta(unsigned long m, mpfr_prec_t prec) {
  if (m < 2) throw eval_error("riemann_zeta: argument must be >= 2");
  RealBall b(prec);
  b.absorb_ternary(mpfr_zeta_ui(b.mid_, m, MPFR_RNDN));
  return b;
}

RealBall RealBall::pow10(long e, mpfr_prec_t prec) {
  Rational q;
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
  if (e >= 0)
    q = p;
  else
    q = Rational(1) / Rational(p);
  return of_rational(q, prec);
}

bool RealBall::is_zero_exact() const {
  return mpfr_zero_p(mid_) && mpfr_zero_p(rad_);
}

bool RealBall::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool RealBall::overlaps(const RealBall& o) const {
  return (*this - o).contains_zero();
}

bool RealBall::dev_within(double bound) const {
  double m = std::fabs(mpfr_get_d(mid_, MPFR_RNDA));
  double r = mpfr_get_d(rad_, MPFR_RNDZ);
  return m <= bound + r;
}

bool RealBall::mag_le(double bound) const {
  double m = std::fabs(mpfr_get_d(mid_, MPFR_RNDA));
  double r = mpfr_get_d(rad_, MPFR_RNDA);
  return std::nextafter(m + r, INFINITY) <= bound;
}

double RealBall::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

double RealBall::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

int RealBall::mid_sign() const { return mpfr_sgn(mid_); }

bool RealBall::surely_nonneg() const {
  if (mpfr_sgn(mid_) < 0) return false;
  return mpfr_cmp(mid_, rad_) >= 0;
}

namespace {

std::string decimal_of(const mpfr_t x, size_t digits, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x)) return "0";
  if (!mpfr_regular_p(x)) throw eval_error("ball: non-finite value printed");
  mpfr_exp_t e;
  char* raw = mpfr_get_str(nullptr, &e, 10, digits, x, rnd);
  std::string s(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (s[0] == '-') {
    sign = "-";
    s.erase(0, 1);
  }
  // mpfr convention: value = 0.s * 10^e.
  std::string out = sign + s.substr(0, 1);
  if (s.size() > 1) out += "." + s.substr(1);
  out += "e" + std::to_string(static_cast<long>(e - 1));
  return out;
}

}  // namespace

std::string RealBall::mid_decimal(size_t digits) const {
  return decimal_of(mid_, digits, MPFR_RNDN);
}

std::string RealBall::rad_decimal() const {
  // 12 significant digits recover a kRadPrec-bit value exactly on a
  // round-to-nearest re-parse, so put/get cycles are stationary.
  return decimal_of(rad_, decimal_digits_for(kRadPrec), MPFR_RNDN);
}

std::string RealBall::to_string(size_t digits) const {
  return mid_decimal(digits) + " +/- " + rad_decimal();
}

RealBall RealBall::from_decimal(const std::string& mid, const std::string& rad,
                                mpfr_prec_t prec) {
  RealBall b(prec);
  char* end = nullptr;
  mpfr_strtofr(b.mid_, mid.c_str(), &end, 10, MPFR_RNDN);
  if (end != mid.c_str() + mid.size() || mid.empty())
    throw eval_error("from_decimal: bad midpoint '" + mid + "'");
  mpfr_strtofr(b.rad_, rad.c_str(), &end, 10, MPFR_RNDN);
  if (end != rad.c_str() + rad.size() || rad.empty() || mpfr_sgn(b.rad_) < 0)
    throw eval_error("from_decimal: bad radius '" + rad + "'");
  return b;
}

size_t RealBall::decimal_digits_for(mpfr_prec_t prec) {
  return static_cast<size_t>(prec * 0.30103) + 3;
}

RealBall& RealBall::operator+=(const RealBall& o) {
  if (mpfr_get_prec(mid_) < mpfr_get_prec(o.mid_))
    mpfr_prec_round(mid_, mpfr_get_prec(o.mid_), MPFR_RNDN);
  mpfr_add(rad_, rad_, o.rad_, MPFR_RNDU);
  absorb_ternary(mpfr_add(mid_, mid_, o.mid_, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator-=(const RealBall& o) {
  if (mpfr_get_prec(mid_) < mpfr_get_prec(o.mid_))
    mpfr_prec_round(mid_, mpfr_get_prec(o.mid_), MPFR_RNDN);
  mpfr_add(rad_, rad_, o.rad_, MPFR_RNDU);
  absorb_ternary(mpfr_sub(mid_, mid_, o.mid_, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator*=(const RealBall& o) {
  if (mpfr_get_prec(mid_) < mpfr_get_prec(o.mid_))
    mpfr_prec_round(mid_, mpfr_get_prec(o.mid_), MPFR_RNDN);
  // |a| rb + |b| ra + ra rb, everything upward.
  mpfr_ptr sa = rad_scratch(1), sb = rad_scratch(2), acc = rad_scratch(3);
  mpfr_abs(sa, mid_, MPFR_RNDU);
  mpfr_abs(sb, o.mid_, MPFR_RNDU);
  mpfr_mul(sa, sa, o.rad_, MPFR_RNDU);
  mpfr_mul(sb, sb, rad_, MPFR_RNDU);
  mpfr_mul(acc, rad_, o.rad_, MPFR_RNDU);
  mpfr_add(acc, acc, sa, MPFR_RNDU);
  mpfr_add(acc, acc, sb, MPFR_RNDU);
  mpfr_set(rad_, acc, MPFR_RNDU);
  absorb_ternary(mpfr_mul(mid_, mid_, o.mid_, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator/=(const RealBall& o) { return *this *= recip(o); }

RealBall RealBall::operator-() const {
  RealBall b(*this);
  mpfr_neg(b.mid_, b.mid_, MPFR_RNDN);
  return b;
}

RealBall& RealBall::mul_2exp(long e) {
  mpfr_mul_2si(mid_, mid_, e, MPFR_RNDN);
  mpfr_mul_2si(rad_, rad_, e, MPFR_RNDU);
  return *this;
}

RealBall& RealBall::neg() {
  mpfr_neg(mid_, mid_, MPFR_RNDN);
  return *this;
}

RealBall& RealBall::mul_ui(unsigned long n) {
  mpfr_mul_ui(rad_, rad_, n, MPFR_RNDU);
  absorb_ternary(mpfr_mul_ui(mid_, mid_, n, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::div_ui(unsigned long n) {
  if (n == 0) throw eval_error("div_ui: zero divisor");
  mpfr_div_ui(rad_, rad_, n, MPFR_RNDU);
  absorb_ternary(mpfr_div_ui(mid_, mid_, n, MPFR_RNDN));
  return *this;
}

void RealBall::add_error_2exp(long e) { rad_add_2exp(rad_, e); }

void RealBall::add_error(const RealBall& b) {
  mpfr_ptr t = rad_scratch(1);
  mpfr_abs(t, b.mid_, MPFR_RNDU);
  mpfr_add(rad_, rad_, t, MPFR_RNDU);
  mpfr_add(rad_, rad_, b.rad_, MPFR_RNDU);
}

void RealBall::round_to(mpfr_prec_t p) {
  absorb_ternary(mpfr_prec_round(mid_, std::max<mpfr_prec_t>(p, 16), MPFR_RNDN));
}

bool RealBall::meets_precision(mpfr_prec_t p) const {
  mpfr_ptr b = rad_scratch(1);
  mpfr_abs(b, mid_, MPFR_RNDD);
  if (mpfr_cmp_ui(b, 1) < 0) mpfr_set_ui(b, 1, MPFR_RNDZ);
  mpfr_mul_2si(b, b, 1 - static_cast<long>(p), MPFR_RNDD);
  return mpfr_cmp(rad_, b) <= 0;
}

RealBall recip(const RealBall& b) {
  if (b.contains_zero()) throw eval_error("recip: ball contains zero");
  RealBall out(mpfr_get_prec(b.mid_));
  mpfr_ptr lo = rad_scratch(1), den = rad_scratch(2);
  mpfr_abs(lo, b.mid_, MPFR_RNDD);
  mpfr_sub(den, lo, b.rad_, MPFR_RNDD);
  if (mpfr_sgn(den) <= 0) throw eval_error("recip: ball touches zero");
  mpfr_mul(den, den, lo, MPFR_RNDD);
  mpfr_div(out.rad_, b.rad_, den, MPFR_RNDU);
  out.absorb_ternary(mpfr_ui_div(out.mid_, 1, b.mid_, MPFR_RNDN));
  return out;
}

RealBall log(const RealBall& b) {
  if (mpfr_sgn(b.mid_) <= 0) throw eval_error("log: non-positive ball");
  RealBall out(mpfr_get_prec(b.mid_));
  mpfr_ptr lo = rad_scratch(1);
  mpfr_abs(lo, b.mid_, MPFR_RNDD);
  mpfr_sub(lo, lo, b.rad_, MPFR_RNDD);
  if (mpfr_sgn(lo) <= 0) throw eval_error("log: ball touches zero");
  mpfr_div(out.rad_, b.rad_, lo, MPFR_RNDU);
  out.absorb_ternary(mpfr_log(out.mid_, b.mid_, MPFR_RNDN));
  return out;
}

RealBall sqrt(const RealBall& b) {
  if (mpfr_sgn(b.mid_) < 0) throw eval_error("sqrt: negative ball");
  RealBall out(mpfr_get_prec(b.mid_));
  // |sqrt(x) - sqrt(mid)| <= rad / (2 sqrt(lo)) on [lo, mid + rad].
  mpfr_ptr lo = rad_scratch(1);
  mpfr_sub(lo, b.mid_, b.rad_, MPFR_RNDD);
  if (mpfr_sgn(lo) <= 0) throw eval_error("sqrt: ball touches zero");
  mpfr_sqrt(lo, lo, MPFR_RNDD);
  mpfr_mul_2si(lo, lo, 1, MPFR_RNDD);
  mpfr_div(out.rad_, b.rad_, lo, MPFR_RNDU);
  out.absorb_ternary(mpfr_sqrt(out.mid_, b.mid_, MPFR_RNDN));
  return out;
}

RealBall exp(const RealBall& b) {
  RealBall out(mpfr_get_prec(b.mid_));
  mpfr_ptr hi = rad_scratch(1);
  mpfr_set(hi, b.mid_, MPFR_RNDU);
  mpfr_add(hi, hi, b.rad_, MPFR_RNDU);
  mpfr_exp(hi, hi, MPFR_RNDU);
  mpfr_mul(out.rad_, hi, b.rad_, MPFR_RNDU);
  out.absorb_ternary(mpfr_exp(out.mid_, b.mid_, MPFR_RNDN));
  return out;
}

RealBall pow_ui(const RealBall& b, unsigned long n) {
  RealBall out = RealBall::exact(1, mpfr_get_prec(b.mid_));
  RealBall base = b;
  while (n) {
    if (n & 1) out *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return out;
}

RealBall abs_ball(const RealBall& b) {
  RealBall out(b);
  mpfr_abs(out.mid_, out.mid_, MPFR_RNDN);
  return out;
}

}  // namespace akzeta
