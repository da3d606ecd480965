#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "zimin/arith/rational.hpp"
#include "zimin/errors.hpp"

namespace zimin {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kPrecisionCap = 4096;

namespace detail {

// Owning handle for one MPFR number. Every value an MPFR number can hold is a
// dyadic rational, which is what interval endpoints are.
class Mpfr {
 public:
  explicit Mpfr(Precision prec) { mpfr_init2(v_, prec); }
  Mpfr(const Mpfr& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  Mpfr& operator=(Mpfr other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  Precision prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

inline Rational to_rational(const Mpfr& x) {
  if (!mpfr_number_p(x.get())) throw DomainError("non-finite interval endpoint");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x.get());
  return q;
}

inline int cmp(const Mpfr& a, const Mpfr& b) { return mpfr_cmp(a.get(), b.get()); }
inline int cmp(const Mpfr& a, const Rational& b) { return mpfr_cmp_q(a.get(), b.get_mpq_t()); }

}  // namespace detail

// Closed interval [lo, hi] with dyadic endpoints. All operations round
// outward, so the exact image of any point of the inputs lies in the output.
class Interval {
 public:
  explicit Interval(Precision prec = kDefaultPrecision) : lo_(prec), hi_(prec) {
    mpfr_set_zero(lo_.get(), 1);
    mpfr_set_zero(hi_.get(), 1);
  }

  Interval(const Rational& value, Precision prec) : lo_(prec), hi_(prec) {
    mpfr_set_q(lo_.get(), value.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_.get(), value.get_mpq_t(), MPFR_RNDU);
  }

  Interval(const Rational& lo, const Rational& hi, Precision prec) : lo_(prec), hi_(prec) {
    if (lo > hi) throw ContractError("interval with lo > hi");
    mpfr_set_q(lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
  }

  static Interval from_int(long value, Precision prec = kDefaultPrecision) {
    return Interval(Rational(value), prec);
  }

  // Takes ownership of endpoints that were already rounded outward.
  static Interval from_endpoints(detail::Mpfr lo, detail::Mpfr hi) {
    Interval out(std::max(lo.prec(), hi.prec()));
    out.lo_ = std::move(lo);
    out.hi_ = std::move(hi);
    if (detail::cmp(out.lo_, out.hi_) > 0) throw ContractError("interval with lo > hi");
    return out;
  }

  Precision prec() const { return std::max(lo_.prec(), hi_.prec()); }
  const detail::Mpfr& lo_mpfr() const { return lo_; }
  const detail::Mpfr& hi_mpfr() const { return hi_; }

  Rational lo() const { return detail::to_rational(lo_); }
  Rational hi() const { return detail::to_rational(hi_); }
  Rational width() const { return hi() - lo(); }
  double lo_double() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
  double mid_double() const { return 0.5 * (lo_double() + hi_double()); }

  bool is_point() const { return detail::cmp(lo_, hi_) == 0; }
  bool contains(const Rational& q) const {
    return detail::cmp(lo_, q) <= 0 && detail::cmp(hi_, q) >= 0;
  }
  bool contains(const Interval& other) const {
    return detail::cmp(lo_, other.lo_) <= 0 && detail::cmp(hi_, other.hi_) >= 0;
  }
  bool strictly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool strictly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

  friend Interval operator-(const Interval& x) {
    detail::Mpfr lo(x.prec()), hi(x.prec());
    mpfr_neg(lo.get(), x.hi_.get(), MPFR_RNDD);
    mpfr_neg(hi.get(), x.lo_.get(), MPFR_RNDU);
    return from_endpoints(std::move(lo), std::move(hi));
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Precision p = std::max(a.prec(), b.prec());
    detail::Mpfr lo(p), hi(p);
    mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return from_endpoints(std::move(lo), std::move(hi));
  }

  friend Interval operator-(const Interval& a, const Interval& b) {
    Precision p = std::max(a.prec(), b.prec());
    detail::Mpfr lo(p), hi(p);
    mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return from_endpoints(std::move(lo), std::move(hi));
  }

  friend Interval operator*(const Interval& a, const Interval& b) {
    Precision p = std::max(a.prec(), b.prec());
    const detail::Mpfr* xs[2] = {&a.lo_, &a.hi_};
    const detail::Mpfr* ys[2] = {&b.lo_, &b.hi_};
    detail::Mpfr lo(p), hi(p), t(p);
    mpfr_set_inf(lo.get(), 1);
    mpfr_set_inf(hi.get(), -1);
    for (auto* x : xs) {
      for (auto* y : ys) {
        mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
        mpfr_min(lo.get(), lo.get(), t.get(), MPFR_RNDD);
        mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
        mpfr_max(hi.get(), hi.get(), t.get(), MPFR_RNDU);
      }
    }
    return from_endpoints(std::move(lo), std::move(hi));
  }

  friend Interval operator/(const Interval& a, const Interval& b) {
    return a * b.reciprocal();
  }

  Interval reciprocal() const {
    if (contains_zero()) throw DomainError("division by an interval containing zero");
    detail::Mpfr lo(prec()), hi(prec());
    mpfr_ui_div(lo.get(), 1, hi_.get(), MPFR_RNDD);
    mpfr_ui_div(hi.get(), 1, lo_.get(), MPFR_RNDU);
    return from_endpoints(std::move(lo), std::move(hi));
  }

  friend Interval operator+(const Interval& a, const Rational& b) { return a + Interval(b, a.prec()); }
  friend Interval operator-(const Interval& a, const Rational& b) { return a - Interval(b, a.prec()); }
  friend Interval operator*(const Interval& a, const Rational& b) { return a * Interval(b, a.prec()); }
  friend Interval operator/(const Interval& a, const Rational& b) { return a / Interval(b, a.prec()); }
  friend Interval operator+(const Rational& a, const Interval& b) { return Interval(a, b.prec()) + b; }
  friend Interval operator-(const Rational& a, const Interval& b) { return Interval(a, b.prec()) - b; }
  friend Interval operator*(const Rational& a, const Interval& b) { return Interval(a, b.prec()) * b; }
  friend Interval operator/(const Rational& a, const Interval& b) { return Interval(a, b.prec()) / b; }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  friend Interval hull(const Interval& a, const Interval& b) {
    Precision p = std::max(a.prec(), b.prec());
    detail::Mpfr lo(p), hi(p);
    mpfr_min(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_max(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return from_endpoints(std::move(lo), std::move(hi));
  }

  std::string debug_string(int digits = 20) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "[%.*RDg, %.*RUg]", digits, lo_.get(), digits, hi_.get());
    return buf;
  }

 private:
  detail::Mpfr lo_, hi_;
};

// Applies a non-decreasing correctly-rounded MPFR function endpoint-wise.
template <class MpfrFn>
Interval apply_increasing(const Interval& x, MpfrFn fn) {
  detail::Mpfr lo(x.prec()), hi(x.prec());
  fn(lo.get(), x.lo_mpfr().get(), MPFR_RNDD);
  fn(hi.get(), x.hi_mpfr().get(), MPFR_RNDU);
  return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_mpfr().get()) < 0) throw DomainError("sqrt of an interval with negative part");
  return apply_increasing(x, mpfr_sqrt);
}

inline Interval exp(const Interval& x) { return apply_increasing(x, mpfr_exp); }

inline Interval log(const Interval& x) {
  if (!x.strictly_positive()) throw DomainError("ln of an interval that is not strictly positive");
  return apply_increasing(x, mpfr_log);
}

// Exact integer power, including negative exponents and sign-straddling bases.
inline Interval pow_int(const Interval& x, long n) {
  if (n < 0) return pow_int(x, -n).reciprocal();
  if (n == 0) return Interval::from_int(1, x.prec());
  auto un = static_cast<unsigned long>(n);
  auto power = [un](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t r) { mpfr_pow_ui(out, in, un, r); };
  if (mpfr_sgn(x.lo_mpfr().get()) >= 0) return apply_increasing(x, power);
  if (n % 2 == 1) return apply_increasing(x, power);
  if (mpfr_sgn(x.hi_mpfr().get()) <= 0) return pow_int(-x, n);
  // even power of an interval straddling zero
  detail::Mpfr m(x.prec()), hi(x.prec()), lo(x.prec());
  mpfr_neg(m.get(), x.lo_mpfr().get(), MPFR_RNDU);
  mpfr_max(m.get(), m.get(), x.hi_mpfr().get(), MPFR_RNDU);
  mpfr_pow_ui(hi.get(), m.get(), un, MPFR_RNDU);
  mpfr_set_zero(lo.get(), 1);
  return Interval::from_endpoints(std::move(lo), std::move(hi));
}

// x^(numerator/2) for x >= 0, as pow_int(x, floor(numerator/2)) times sqrt(x)
// when numerator is odd.
inline Interval pow_half_int(const Interval& x, long numerator) {
  if (mpfr_sgn(x.lo_mpfr().get()) < 0) throw DomainError("half-integer power of a negative interval");
  long whole = numerator >= 0 ? numerator / 2 : -((-numerator + 1) / 2);
  Interval out = pow_int(x, whole);
  if (numerator % 2 != 0) out = out * sqrt(x);
  return out;
}

// base^exponent = exp(exponent * ln(base)) for base > 0.
inline Interval pow(const Interval& base, const Interval& exponent) {
  return exp(exponent * log(base));
}

inline Interval pi_enclosure(Precision prec = kDefaultPrecision) {
  detail::Mpfr lo(prec), hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Interval::from_endpoints(std::move(lo), std::move(hi));
}

inline Interval e_enclosure(Precision prec = kDefaultPrecision) {
  return exp(Interval::from_int(1, prec));
}

inline Interval exp_enclosure(const Interval& x) { return exp(x); }
inline Interval ln_enclosure(const Interval& x) { return log(x); }
inline Interval sqrt_enclosure(const Interval& x) { return sqrt(x); }

// Three-valued comparisons; std::nullopt-free so callers can switch on them.
enum class Order { Less, Equal, Greater, Unknown };

inline Order compare(const Interval& x, const Rational& q) {
  if (detail::cmp(x.hi_mpfr(), q) < 0) return Order::Less;
  if (detail::cmp(x.lo_mpfr(), q) > 0) return Order::Greater;
  if (x.is_point() && detail::cmp(x.lo_mpfr(), q) == 0) return Order::Equal;
  return Order::Unknown;
}

inline Order compare(const Interval& x, const Interval& y) {
  if (detail::cmp(x.hi_mpfr(), y.lo_mpfr()) < 0) return Order::Less;
  if (detail::cmp(x.lo_mpfr(), y.hi_mpfr()) > 0) return Order::Greater;
  if (x.is_point() && y.is_point() && detail::cmp(x.lo_mpfr(), y.lo_mpfr()) == 0)
    return Order::Equal;
  return Order::Unknown;
}

}  // namespace zimin
