#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zimin/exact_arith.hpp"
#include "zimin/series.hpp"

namespace zimin {

inline constexpr std::uint32_t kDefaultZetaTerms = 256;
inline constexpr std::uint32_t kDefaultPartialProductJ = 4;

// lambda = 4 / pi^{3/2}
inline Interval lambda_enclosure(Precision prec = kDefaultPrecision) {
  return Rational(4) / pow_half_int(pi_enclosure(prec), 3);
}

// P(m,k) = 1 + 2 m^{1-k} + m^{k+1} (2m)^{k/2} / (2 pi)^{k(m-1)/2} * zeta(k(m-1)/2)
inline Interval P_enclosure(std::uint32_t m, std::uint32_t k, Precision prec = kDefaultPrecision,
                            std::uint32_t zeta_terms = kDefaultZetaTerms) {
  if (m < 4) throw UnsupportedRegime("P_enclosure needs m >= 4");
  detail::require(k >= 1, "P_enclosure: k must be positive");
  const long km = static_cast<long>(k) * (m - 1);
  Interval two_pi = pi_enclosure(prec) * Rational(2);
  Interval zeta = zeta_enclosure(make_rational(km, 2), zeta_terms, prec);
  Interval series_part = Interval(pow_int(Rational(m), static_cast<long>(k) + 1), prec) *
                         pow_half_int(Interval(Rational(2 * m), prec), k) /
                         pow_half_int(two_pi, km) * zeta;
  Rational rational_part = 1 + 2 * pow_int(Rational(m), 1 - static_cast<long>(k));
  return rational_part + series_part;
}

// prod_{j=1}^{J} P(m, 2^j - 1)
inline Interval P_partial_product(std::uint32_t m, std::uint32_t J, Precision prec = kDefaultPrecision,
                                  std::uint32_t zeta_terms = kDefaultZetaTerms) {
  Interval product = Interval::from_int(1, prec);
  for (std::uint32_t j = 1; j <= J; ++j) product *= P_enclosure(m, (1u << j) - 1, prec, zeta_terms);
  return product;
}

enum class PRegime { Large, Small };  // m >= 7 and 4 <= m <= 6

inline PRegime regime_of(std::uint32_t m) { return m >= 7 ? PRegime::Large : PRegime::Small; }

inline std::string to_string(PRegime r) { return r == PRegime::Large ? "m>=7" : "4<=m<=6"; }

// Upper bound on sum_{j > J} ln P(m, 2^j - 1), using per-factor bounds
//   ln P(m,k) <= 4 m^{1-k}      (m >= 7)
//   ln P(m,k) <= 5 m lambda^k   (4 <= m <= 6).
// The exponents 2^j - 2 (resp. 2^j - 1), j > J, are distinct integers, so the
// sums are dominated by geometric series starting at j = J+1.
inline Interval P_inf_log_tail(std::uint32_t m, std::uint32_t J, Precision prec = kDefaultPrecision) {
  if (m < 4) throw UnsupportedRegime("P_inf bounds need m >= 4");
  const long first = (1L << (J + 1));
  if (regime_of(m) == PRegime::Large) {
    Rational mq(m);
    Rational bound = 4 * pow_int(mq, -(first - 2)) * mq / (mq - 1);
    return Interval(bound, prec);
  }
  Interval lambda = lambda_enclosure(prec);
  return Rational(5 * m) * pow_int(lambda, first - 1) / (Rational(1) - lambda);
}

struct PInfReport {
  std::uint32_t m = 0;
  std::uint32_t J = 0;
  PRegime regime = PRegime::Small;
  Interval partial_product;
  Interval log_tail;
  Interval upper;  // upper.hi bounds P_inf(m)
  Verdict at_most_42 = Verdict::Inconclusive;
  Precision precision = kDefaultPrecision;
};

// Certified upper bound on P_inf(m) = prod_{j>=1} P(m, 2^j - 1): the first J
// factors exactly enclosed, the rest through P_inf_log_tail.
inline PInfReport P_inf_upper(std::uint32_t m, std::uint32_t J = kDefaultPartialProductJ,
                              Precision start = kDefaultPrecision) {
  if (m < 4) throw UnsupportedRegime("P_inf_upper needs m >= 4");
  detail::require(J >= 1 && J <= 20, "P_inf_upper: J must lie in 1..20");
  struct Parts {
    Interval partial, tail, upper;
  };
  auto run = certify(
      [&](Precision prec) {
        Interval partial = P_partial_product(m, J, prec);
        Interval tail = P_inf_log_tail(m, J, prec);
        return Parts{partial, tail, partial * exp(tail)};
      },
      [](const Parts& p) { return verdict_le(compare(p.upper, Rational(42))); }, start);
  PInfReport out;
  out.m = m;
  out.J = J;
  out.regime = regime_of(m);
  out.partial_product = run.value.partial;
  out.log_tail = run.value.tail;
  out.upper = run.value.upper;
  out.at_most_42 = run.verdict;
  out.precision = run.precision;
  return out;
}

// The constants closing the two regime arguments, each compared with ln 42.
struct RegimeConstantCheck {
  Interval value;
  Interval ln42;
  Verdict verdict;
};

// ln 5 + 2/21 <= ln 42
inline RegimeConstantCheck large_regime_constant(Precision prec = kDefaultPrecision) {
  Interval value = log(Interval::from_int(5, prec)) + make_rational(2, 21);
  Interval ln42 = log(Interval::from_int(42, prec));
  return {value, ln42, verdict_le(compare(value, ln42))};
}

// ln 41 + 30 * 3^31 / 4^30 <= ln 42
inline RegimeConstantCheck small_regime_constant(Precision prec = kDefaultPrecision) {
  Rational slack = 30 * pow_int(Rational(3), 31) / pow_int(Rational(4), 30);
  Interval value = log(Interval::from_int(41, prec)) + slack;
  Interval ln42 = log(Interval::from_int(42, prec));
  return {value, ln42, verdict_le(compare(value, ln42))};
}

// Intermediate steps of the regime arguments, for a given m.
struct RegimeSteps {
  // m >= 7: P(m,1) <= 5 and 4/(m(m-1)) <= 2/21
  // m <= 6: prod_{j<=4} P(m,2^j-1) <= 41 and 5 m lambda^31/(1-lambda) <= 30*3^31/4^30
  Verdict head;
  Verdict tail;
};

inline RegimeSteps regime_steps(std::uint32_t m, Precision prec = kDefaultPrecision) {
  if (m < 4) throw UnsupportedRegime("regime_steps needs m >= 4");
  if (regime_of(m) == PRegime::Large) {
    Verdict head = verdict_le(compare(P_enclosure(m, 1, prec), Rational(5)));
    Rational mq(m);
    Verdict tail = 4 / (mq * (mq - 1)) <= make_rational(2, 21) ? Verdict::Holds : Verdict::Fails;
    return {head, tail};
  }
  Verdict head = verdict_le(compare(P_partial_product(m, 4, prec), Rational(41)));
  Interval lambda = lambda_enclosure(prec);
  Interval used = Rational(5 * m) * pow_int(lambda, 31) / (Rational(1) - lambda);
  Rational stated = 30 * pow_int(Rational(3), 31) / pow_int(Rational(4), 30);
  return {head, verdict_le(compare(used, stated))};
}

// 2 m^{2^i} / m^{i+1}, the value of the K upper envelope.
inline Rational K_upper_envelope(std::uint32_t m, std::uint32_t i) {
  detail::require(i >= 1 && i < 31, "K envelope: i out of range");
  return 2 * pow_int(Rational(m), (1L << i) - static_cast<long>(i) - 1);
}

inline Rational K_lower_envelope(std::uint32_t m, std::uint32_t i) {
  return K_upper_envelope(m, i) / 42;
}

namespace detail {

// Exact partial sums of S(m, 2^j), j = 1..i_max-1, computed once and
// re-enclosed at whatever precision a comparison needs.
class KFamily {
 public:
  KFamily(std::uint32_t m, std::uint32_t i_max, const TruncationPolicy& policy) : m_(m) {
    if (m < 4) throw UnsupportedRegime("K enclosures are certified only for m >= 4");
    ks_ = K_exponents(i_max);
    if (policy.target_width) {
      for (auto k : ks_) {
        SeriesResult s = S_enclosure(m, k, policy);
        partials_.push_back(s.partial_sum);
        policies_.push_back(s.policy);
      }
    } else {
      partials_ = T_partial_sums(m, ks_, (policy.a_max + 1) * m);
      policies_.assign(ks_.size(), policy);
    }
  }

  std::vector<SeriesResult> S_values(std::uint32_t i, Precision prec) const {
    std::vector<SeriesResult> out;
    for (std::uint32_t j = 1; j < i; ++j)
      out.push_back(assemble_S(m_, ks_[j - 1], partials_[j - 1], policies_[j - 1], prec));
    return out;
  }

  Interval K(std::uint32_t i, Precision prec) const { return K_from_S(S_values(i, prec), prec); }

 private:
  std::uint32_t m_;
  std::vector<std::uint32_t> ks_;
  std::vector<Rational> partials_;
  std::vector<TruncationPolicy> policies_;
};

}  // namespace detail

struct SandwichReport {
  std::uint32_t m = 0;
  std::uint32_t i = 0;
  Interval K;
  Rational upper_envelope;
  Rational lower_envelope;
  Verdict upper_side = Verdict::Inconclusive;  // K <= upper envelope
  Verdict lower_side = Verdict::Inconclusive;  // K >= lower envelope
  Precision precision = kDefaultPrecision;

  Verdict overall() const { return combine(upper_side, lower_side); }
};

namespace detail {

inline SandwichReport sandwich_from(const KFamily& family, std::uint32_t m, std::uint32_t i,
                                    Precision start) {
  SandwichReport out;
  out.m = m;
  out.i = i;
  out.upper_envelope = K_upper_envelope(m, i);
  out.lower_envelope = K_lower_envelope(m, i);
  auto judge = [&](const Interval& K) {
    return combine(verdict_le(compare(K, out.upper_envelope)),
                   verdict_ge(compare(K, out.lower_envelope)));
  };
  auto run = certify([&](Precision prec) { return family.K(i, prec); }, judge, start);
  out.K = run.value;
  out.upper_side = verdict_le(compare(out.K, out.upper_envelope));
  out.lower_side = verdict_ge(compare(out.K, out.lower_envelope));
  out.precision = run.precision;
  return out;
}

}  // namespace detail

// Checks (1/21) m^{2^i}/m^{i+1} <= K(m,i) <= 2 m^{2^i}/m^{i+1} against the
// certified K enclosure, doubling precision while a side is undecided.
inline SandwichReport sandwich_check(std::uint32_t m, std::uint32_t i, const TruncationPolicy& policy = {},
                                     Precision start = kDefaultPrecision) {
  detail::require(i >= 1, "sandwich_check: i must be at least 1");
  detail::KFamily family(m, i, policy);
  return detail::sandwich_from(family, m, i, start);
}

// All (m, i) cells of a grid; S partial sums are shared along each m.
inline std::vector<SandwichReport> sandwich_grid(std::uint32_t m_lo, std::uint32_t m_hi,
                                                 std::uint32_t i_lo, std::uint32_t i_hi,
                                                 const TruncationPolicy& policy = {},
                                                 Precision start = kDefaultPrecision) {
  detail::require(m_lo <= m_hi && i_lo <= i_hi && i_lo >= 1, "sandwich_grid: empty range");
  std::vector<SandwichReport> out;
  for (std::uint32_t m = m_lo; m <= m_hi; ++m) {
    detail::KFamily family(m, i_hi, policy);
    for (std::uint32_t i = i_lo; i <= i_hi; ++i) out.push_back(detail::sandwich_from(family, m, i, start));
  }
  return out;
}

struct LabBoundRow {
  std::uint32_t m = 0;
  std::uint32_t i = 0;
  Interval K;
  // sqrt(K.lo) enclosed; its lo is the reported lower-bound figure
  Interval sqrt_K_lo;
  // truncation actually used for this m (see lab_bound_table)
  std::uint32_t a_max = 0;
};

// Rows (m, i, K, sqrt(K.lo)). The (1 + eps_m(i)) factor of the asymptotic
// L_ab bound is not applied.
// K.lo should grow with i (K(m,i+1) = K(m,i)/S(m,2^i) and S < 1). When the
// enclosures at policy.a_max are too loose to show that for some m (S(4,2)
// converges slowly), a_max is doubled for that m, up to policy.a_max_cap.
inline std::vector<LabBoundRow> lab_bound_table(std::uint32_t m_lo, std::uint32_t m_hi,
                                                std::uint32_t i_lo, std::uint32_t i_hi,
                                                const TruncationPolicy& policy = {},
                                                Precision prec = kDefaultPrecision) {
  detail::require(m_lo <= m_hi && i_lo <= i_hi && i_lo >= 1, "lab_bound_table: empty range");
  std::vector<LabBoundRow> rows;
  for (std::uint32_t m = m_lo; m <= m_hi; ++m) {
    TruncationPolicy local = policy;
    std::vector<LabBoundRow> block;
    for (;;) {
      block.clear();
      detail::KFamily family(m, i_hi, local);
      bool increasing = true;
      for (std::uint32_t i = i_lo; i <= i_hi; ++i) {
        Interval K = family.K(i, prec);
        Interval K_lo(K.lo(), prec);
        if (!block.empty()) increasing = increasing && K.lo() > block.back().K.lo();
        block.push_back({m, i, K, sqrt(K_lo), local.a_max});
      }
      if (increasing || local.target_width || local.a_max * 2 > local.a_max_cap) break;
      local.a_max *= 2;
    }
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

}  // namespace zimin
