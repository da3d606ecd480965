#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zimin/exact_arith.hpp"

namespace zimin {

// ell = a*m + b with a >= 0 and 1 <= b <= m (so ell = m gives a = 0, b = m).
struct EllSplit {
  std::uint32_t a;
  std::uint32_t b;
};

inline EllSplit split_ell(std::uint32_t ell, std::uint32_t m) {
  detail::require(ell >= 1 && m >= 1, "split_ell: ell and m must be positive");
  std::uint32_t a = (ell - 1) / m;
  return {a, ell - a * m};
}

// sum over m-compositions of ell of multinomial^k, for each k in ks.
inline std::vector<BigInt> multinomial_power_sums(std::uint32_t m, std::uint32_t ell,
                                                  std::span<const std::uint32_t> ks) {
  std::vector<BigInt> sums(ks.size(), 0);
  BigInt power;
  for_each_composition_group(ell, m, [&](const CompositionGroup& g) {
    for (std::size_t t = 0; t < ks.size(); ++t) {
      mpz_pow_ui(power.get_mpz_t(), g.multinomial.get_mpz_t(), ks[t]);
      sums[t] += g.count * power;
    }
  });
  return sums;
}

// T(m,k,ell) = m^{-k ell} * sum over non-negative m-compositions of
// multinomial(ell; i_1..i_m)^k.
inline Rational T_exact(std::uint32_t m, std::uint32_t k, std::uint32_t ell) {
  detail::require(m >= 1 && k >= 1 && ell >= 1, "T_exact: m, k, ell must be positive");
  const std::uint32_t ks[] = {k};
  BigInt num = multinomial_power_sums(m, ell, ks)[0];
  return make_rational(num, pow_int(BigInt(m), static_cast<unsigned long>(k) * ell));
}

// sum_{ell=1}^{ell_max} T(m,k,ell) for each k, sharing the composition
// enumeration across all k.
inline std::vector<Rational> T_partial_sums(std::uint32_t m, std::span<const std::uint32_t> ks,
                                            std::uint32_t ell_max) {
  // acc_k = sum_ell N_{k,ell} * m^{k (ell_max - ell)}, accumulated Horner-style
  std::vector<BigInt> acc(ks.size(), 0);
  std::vector<BigInt> step(ks.size());
  for (std::size_t t = 0; t < ks.size(); ++t) step[t] = pow_int(BigInt(m), ks[t]);
  for (std::uint32_t ell = 1; ell <= ell_max; ++ell) {
    auto sums = multinomial_power_sums(m, ell, ks);
    for (std::size_t t = 0; t < ks.size(); ++t) acc[t] = acc[t] * step[t] + sums[t];
  }
  std::vector<Rational> out;
  for (std::size_t t = 0; t < ks.size(); ++t)
    out.push_back(make_rational(acc[t], pow_int(BigInt(m), static_cast<unsigned long>(ks[t]) * ell_max)));
  return out;
}

// Largest multinomial over m-compositions of ell = a*m + b: b parts of size
// a+1 and m-b parts of size a.
inline BigInt V_exact(std::uint32_t m, std::uint32_t a, std::uint32_t b) {
  detail::require(m >= 1 && b >= 1 && b <= m, "V_exact: need 1 <= b <= m");
  std::uint32_t ell = a * m + b;
  return factorial(ell) / (pow_int(factorial(a + 1), b) * pow_int(factorial(a), m - b));
}

inline Rational U_exact(std::uint32_t m, std::uint32_t a, std::uint32_t b) {
  return make_rational(V_exact(m, a, b), pow_int(BigInt(m), a * m + b));
}

// sqrt(2m) / (2 a pi)^{(m-1)/2}, an upper bound on U(m,a,b) for a >= 1 and
// every 1 <= b <= m.
inline Interval U_closed_upper(std::uint32_t m, std::uint32_t a, std::uint32_t b,
                               Precision prec = kDefaultPrecision) {
  detail::require(m >= 1 && b >= 1 && b <= m, "U_closed_upper: need 1 <= b <= m");
  detail::require(a >= 1, "U_closed_upper: the closed-form bound needs a >= 1");
  Interval two_a_pi = pi_enclosure(prec) * Rational(2 * a);
  return sqrt(Interval(Rational(2 * m), prec)) / pow_half_int(two_a_pi, static_cast<long>(m) - 1);
}

struct TruncationPolicy {
  // exact terms cover every ell = a*m + b with a <= a_max
  std::uint32_t a_max = 8;
  // adaptive mode: double a_max until the enclosure is at most this wide
  std::optional<Rational> target_width;
  std::uint32_t a_max_cap = 64;
};

struct SeriesResult {
  Interval value;
  Rational partial_sum;
  std::uint32_t terms_summed = 0;
  Interval tail_bound;
  TruncationPolicy policy;
  bool target_met = true;
};

// Certified bound on sum_{a > a_max} sum_b T(m,k,a*m+b), using
// T(m,k,ell) <= U(m,a,b)^{k-1} <= (sqrt(2m)/(2 a pi)^{(m-1)/2})^{k-1}:
//   m (2m)^{(k-1)/2} / (2 pi)^{(k-1)(m-1)/2} * sum_{a > a_max} a^{-(k-1)(m-1)/2}.
inline Interval S_tail_upper(std::uint32_t m, std::uint32_t k, std::uint32_t a_max,
                             Precision prec = kDefaultPrecision) {
  if (m < 4 || k < 2)
    throw UnsupportedRegime("S tail bound needs m >= 4 and k >= 2");
  detail::require(a_max >= 1, "S tail bound needs a_max >= 1");
  const long km = static_cast<long>(k - 1) * (m - 1);
  Interval two_pi = pi_enclosure(prec) * Rational(2);
  Interval coeff = Interval(Rational(m), prec) *
                   pow_half_int(Interval(Rational(2 * m), prec), static_cast<long>(k) - 1) /
                   pow_half_int(two_pi, km);
  Interval exponent(make_rational(km, 2), prec);
  return coeff * power_tail_upper(exponent, a_max);
}

namespace detail {

inline SeriesResult assemble_S(std::uint32_t m, std::uint32_t k, const Rational& partial,
                               const TruncationPolicy& policy, Precision prec) {
  Interval partial_iv(partial, prec);
  Interval tail = S_tail_upper(m, k, policy.a_max, prec);
  Interval upper = partial_iv + tail;
  SeriesResult out{Interval::from_endpoints(partial_iv.lo_mpfr(), upper.hi_mpfr()),
                   partial, (policy.a_max + 1) * m, tail, policy, true};
  if (policy.target_width) out.target_met = out.value.width() <= *policy.target_width;
  return out;
}

inline void check_S_regime(std::uint32_t m, std::uint32_t k) {
  if (m < 4 || k < 2)
    throw UnsupportedRegime("S_enclosure is certified only for m >= 4 and k >= 2 (S(m,1) diverges)");
}

}  // namespace detail

// Certified enclosure of S(m,k) = sum_{ell>=1} T(m,k,ell): the exact partial
// sum through ell = (a_max+1)*m plus the tail bound above.
inline SeriesResult S_enclosure(std::uint32_t m, std::uint32_t k, TruncationPolicy policy = {},
                                Precision prec = kDefaultPrecision) {
  detail::check_S_regime(m, k);
  detail::require(policy.a_max >= 1, "S_enclosure: a_max must be at least 1");
  const std::uint32_t ks[] = {k};
  for (;;) {
    Rational partial = T_partial_sums(m, ks, (policy.a_max + 1) * m)[0];
    SeriesResult out = detail::assemble_S(m, k, partial, policy, prec);
    if (out.target_met || policy.a_max * 2 > policy.a_max_cap) return out;
    policy.a_max *= 2;
  }
}

// S enclosures for several k at once, sharing one composition enumeration.
// Fixed truncation only.
inline std::vector<SeriesResult> S_enclosures(std::uint32_t m, std::span<const std::uint32_t> ks,
                                              const TruncationPolicy& policy,
                                              Precision prec = kDefaultPrecision) {
  if (policy.target_width) {
    std::vector<SeriesResult> out;
    for (auto k : ks) out.push_back(S_enclosure(m, k, policy, prec));
    return out;
  }
  for (auto k : ks) detail::check_S_regime(m, k);
  detail::require(policy.a_max >= 1, "S_enclosure: a_max must be at least 1");
  auto partials = T_partial_sums(m, ks, (policy.a_max + 1) * m);
  std::vector<SeriesResult> out;
  for (std::size_t t = 0; t < ks.size(); ++t)
    out.push_back(detail::assemble_S(m, ks[t], partials[t], policy, prec));
  return out;
}

// The k values S is needed at for K(m,i): 2, 4, ..., 2^{i-1}.
inline std::vector<std::uint32_t> K_exponents(std::uint32_t i) {
  std::vector<std::uint32_t> ks;
  for (std::uint32_t j = 1; j < i; ++j) ks.push_back(1u << j);
  return ks;
}

// K = 2 / prod S, from enclosures of S(m, 2^j), j = 1..i-1.
inline Interval K_from_S(std::span<const SeriesResult> s_values, Precision prec) {
  Interval product = Interval::from_int(1, prec);
  for (const auto& s : s_values) product *= s.value;
  return Rational(2) / product;
}

// K(m,i) = 2 prod_{j=1}^{i-1} S(m, 2^j)^{-1}.
inline Interval K_enclosure(std::uint32_t m, std::uint32_t i, const TruncationPolicy& policy = {},
                            Precision prec = kDefaultPrecision) {
  detail::require(i >= 1, "K_enclosure: i must be at least 1");
  if (m < 4) throw UnsupportedRegime("K_enclosure is certified only for m >= 4");
  auto ks = K_exponents(i);
  auto s_values = S_enclosures(m, ks, policy, prec);
  return K_from_S(s_values, prec);
}

}  // namespace zimin
