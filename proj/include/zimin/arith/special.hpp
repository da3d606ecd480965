#pragma once

#include <cstdint>

#include "zimin/arith/interval.hpp"

namespace zimin {

// Enclosure of zeta(s) for every s in `s`: the partial sum of n^{-s} up to
// n_terms plus the integral-comparison tail
//   (N+1)^{1-s}/(s-1) <= sum_{n>N} n^{-s} <= N^{1-s}/(s-1).
inline Interval zeta_enclosure(const Interval& s, std::uint32_t n_terms) {
  if (compare(s, Rational(1)) != Order::Greater)
    throw DomainError("zeta_enclosure: series diverges unless s > 1");
  detail::require(n_terms >= 1, "zeta_enclosure: n_terms must be positive");
  const Precision p = s.prec();
  Interval sum = Interval::from_int(1, p);
  for (std::uint32_t n = 2; n <= n_terms; ++n) {
    sum += exp(-s * log(Interval::from_int(n, p)));
  }
  Interval one_minus_s = Rational(1) - s;
  Interval s_minus_one = s - Rational(1);
  Interval tail_lo = exp(one_minus_s * log(Interval::from_int(n_terms + 1, p))) / s_minus_one;
  Interval tail_hi = exp(one_minus_s * log(Interval::from_int(n_terms, p))) / s_minus_one;
  return sum + Interval::from_endpoints(tail_lo.lo_mpfr(), tail_hi.hi_mpfr());
}

inline Interval zeta_enclosure(const Rational& s, std::uint32_t n_terms,
                               Precision prec = kDefaultPrecision) {
  return zeta_enclosure(Interval(s, prec), n_terms);
}

// sum_{a > a_min} a^{-s} <= a_min^{1-s}/(s-1), for s > 1 and a_min >= 1.
inline Interval power_tail_upper(const Interval& s, std::uint64_t a_min) {
  if (compare(s, Rational(1)) != Order::Greater)
    throw DomainError("power_tail_upper: requires s > 1");
  detail::require(a_min >= 1, "power_tail_upper: a_min must be positive");
  const Precision p = s.prec();
  Interval bound = exp((Rational(1) - s) * log(Interval(Rational(BigInt(static_cast<unsigned long>(a_min))), p))) /
                   (s - Rational(1));
  // only the upper end is a valid bound on the sum
  detail::Mpfr zero(p);
  mpfr_set_zero(zero.get(), 1);
  return Interval::from_endpoints(std::move(zero), bound.hi_mpfr());
}

}  // namespace zimin
