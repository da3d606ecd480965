#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zimin/bounds.hpp"
#include "zimin/exact_arith.hpp"
#include "zimin/monte_carlo.hpp"

namespace zimin {

// ---------------------------------------------------------------------------
// The scalar functions.

// f_x(y) = y ln(1 + x/y)
inline Interval f_eval(const Rational& x, const Rational& y, Precision prec = kDefaultPrecision) {
  if (x <= 0 || y <= 0) throw DomainError("f_eval: needs x, y > 0");
  return Interval(y, prec) * log(Interval(1 + x / y, prec));
}

// f_x''(y) = -x^2 / (y (x+y)^2)
inline Rational f_second_derivative(const Rational& x, const Rational& y) {
  return -x * x / (y * (x + y) * (x + y));
}

// g(y) = (y + 1/2) ln(1 + 1/y)
inline Interval g_eval(const Rational& y, Precision prec = kDefaultPrecision) {
  if (y <= 0) throw DomainError("g_eval: needs y > 0");
  return Interval(y + make_rational(1, 2), prec) * log(Interval(1 + 1 / y, prec));
}

// g''(y) = 1 / (2 y^2 (y+1)^2)
inline Rational g_second_derivative(const Rational& y) {
  return 1 / (2 * y * y * (y + 1) * (y + 1));
}

// c ln y + ln 2 - (y - 1) ln(2 pi); h uses c = 3, hbar uses c = 5.
inline Interval log_power_gap(long c, const Rational& y, Precision prec) {
  if (y <= 0) throw DomainError("h_eval: needs y > 0");
  Interval ln_two_pi = log(pi_enclosure(prec) * Rational(2));
  return Rational(c) * log(Interval(y, prec)) + log(Interval::from_int(2, prec)) -
         Interval(y - 1, prec) * ln_two_pi;
}

inline Interval h_eval(const Rational& y, Precision prec = kDefaultPrecision) {
  return log_power_gap(3, y, prec);
}
inline Interval hbar_eval(const Rational& y, Precision prec = kDefaultPrecision) {
  return log_power_gap(5, y, prec);
}

inline Interval h_derivative(const Rational& y, Precision prec = kDefaultPrecision) {
  return Interval(3 / y, prec) - log(pi_enclosure(prec) * Rational(2));
}
inline Interval hbar_derivative(const Rational& y, Precision prec = kDefaultPrecision) {
  return Interval(5 / y, prec) - log(pi_enclosure(prec) * Rational(2));
}

// Z(x) = sqrt(2 pi) x^{x+1/2} e^{-x}, Z(0) = 0. Integer x uses the exact
// power x^x.
inline Interval stirling_Z(const Rational& x, Precision prec = kDefaultPrecision) {
  if (x < 0) throw DomainError("stirling_Z: needs x >= 0");
  if (x == 0) return Interval(prec);
  Interval root_two_pi = sqrt(pi_enclosure(prec) * Rational(2));
  if (x.get_den() == 1) {
    unsigned long n = x.get_num().get_ui();
    Interval power(Rational(pow_int(BigInt(n), n)), prec);
    return root_two_pi * power * sqrt(Interval(x, prec)) * exp(Interval(-x, prec));
  }
  Interval xi(x, prec);
  return root_two_pi * exp(Interval(x + make_rational(1, 2), prec) * log(xi) - xi);
}

// F(a,b) = (a+b)! Z(a) Z(b) / (Z(a+b) a! b!)
inline Interval F_eval(std::uint32_t a, std::uint32_t b, Precision prec = kDefaultPrecision) {
  detail::require(a >= 1 && b >= 1, "F_eval: needs a, b >= 1");
  Rational binom(binomial(a + b, a));
  return binom * stirling_Z(Rational(a), prec) * stirling_Z(Rational(b), prec) /
         stirling_Z(Rational(a + b), prec);
}

// G(a,b) = F(a+1,b) / F(a,b), evaluated from its definition.
inline Interval G_eval(std::uint32_t a, std::uint32_t b, Precision prec = kDefaultPrecision) {
  return F_eval(a + 1, b, prec) / F_eval(a, b, prec);
}

namespace detail {

inline Interval two_ratio_power(std::uint32_t a, std::uint32_t b, const Rational& second_exponent,
                                Precision prec) {
  Rational s(a + b);
  Interval first = exp(Interval(s + make_rational(1, 2), prec) * log(Interval(s / (s + 1), prec)));
  Interval second = exp(Interval(second_exponent, prec) * log(Interval(Rational(a + 1, a), prec)));
  return first * second;
}

}  // namespace detail

// Closed form of G: ((a+b)/(a+b+1))^{a+b+1/2} ((a+1)/a)^{a+1/2}.
inline Interval G_closed(std::uint32_t a, std::uint32_t b, Precision prec = kDefaultPrecision) {
  detail::require(a >= 1 && b >= 1, "G_closed: needs a, b >= 1");
  return detail::two_ratio_power(a, b, Rational(a) + make_rational(1, 2), prec);
}

// The printed variant with exponent a + 3/2 on (a+1)/a. It differs from G by
// the factor (a+1)/a; kept so the geometric-harmonic step can be checked on
// the expression it was applied to.
inline Interval G_printed(std::uint32_t a, std::uint32_t b, Precision prec = kDefaultPrecision) {
  detail::require(a >= 1 && b >= 1, "G_printed: needs a, b >= 1");
  return detail::two_ratio_power(a, b, Rational(a) + make_rational(3, 2), prec);
}

// Gbar(a,b) = 1 + (b-1) / ((2a+2b+1)(a+b+1)(a+1) + (2a+3) a (a+b))
inline Rational Gbar_eval(std::uint32_t a, std::uint32_t b) {
  detail::require(a >= 1 && b >= 1, "Gbar_eval: needs a, b >= 1");
  Rational A(a), B(b);
  return 1 + (B - 1) / ((2 * A + 2 * B + 1) * (A + B + 1) * (A + 1) + (2 * A + 3) * A * (A + B));
}

// Weighted harmonic mean form:
// (2a+b+2) / ((a+b+1/2)(a+b+1)/(a+b) + (a+3/2) a/(a+1))
inline Rational Gbar_harmonic(std::uint32_t a, std::uint32_t b) {
  detail::require(a >= 1 && b >= 1, "Gbar_harmonic: needs a, b >= 1");
  Rational A(a), B(b), half(1, 2);
  return (2 * A + B + 2) /
         ((A + B + half) * (A + B + 1) / (A + B) + (A + 3 * half) * A / (A + 1));
}

// ---------------------------------------------------------------------------
// Certified checks. Each returns a Verdict after precision doubling.

// (1 + x/y)^y < e^x, i.e. f_x(y) < x
inline Verdict check_ineq1(const Rational& x, const Rational& y) {
  return certify([&](Precision p) { return f_eval(x, y, p); },
                 [&](const Interval& f) { return verdict_le(compare(f, x), true); })
      .verdict;
}

// (1 + 1/y)^{y+1/2} > e, i.e. g(y) > 1
inline Verdict check_ineq2(const Rational& y) {
  return certify([&](Precision p) { return g_eval(y, p); },
                 [&](const Interval& g) { return verdict_ge(compare(g, Rational(1)), true); })
      .verdict;
}

// 2 y^3 <= lambda^2 (2 pi)^{y-1} for y >= 4. With lambda^2 = 16/pi^3 the
// right side is 2^{y+3} pi^{y-4}; at y = 4 both sides are the rational 128.
inline Verdict check_ineq3(const Rational& y) {
  if (y < 4) throw DomainError("check_ineq3: needs y >= 4");
  Rational lhs = 2 * y * y * y;
  if (y == 4) return lhs == 128 ? Verdict::Tight : Verdict::Fails;
  return certify(
             [&](Precision p) {
               Interval ln2 = log(Interval::from_int(2, p));
               Interval lnpi = log(pi_enclosure(p));
               return exp(Interval(y + 3, p) * ln2 + Interval(y - 4, p) * lnpi);
             },
             [&](const Interval& rhs) { return verdict_ge(compare(rhs, lhs)); })
      .verdict;
}

// lambda^2 (2 pi)^{y-1} evaluated literally, for cross-checking the
// rewritten form used by check_ineq3.
inline Interval ineq3_rhs_literal(const Rational& y, Precision prec = kDefaultPrecision) {
  Interval lambda = lambda_enclosure(prec);
  Interval two_pi = pi_enclosure(prec) * Rational(2);
  return lambda * lambda * exp(Interval(y - 1, prec) * log(two_pi));
}

// 2 y^5 <= (2 pi)^{y-1} for y >= 7
inline Verdict check_ineq4(const Rational& y) {
  if (y < 7) throw DomainError("check_ineq4: needs y >= 7");
  Rational lhs = 2 * y * y * y * y * y;
  return certify(
             [&](Precision p) {
               return exp(Interval(y - 1, p) * log(pi_enclosure(p) * Rational(2)));
             },
             [&](const Interval& rhs) { return verdict_ge(compare(rhs, lhs)); })
      .verdict;
}

// lambda < 3/4
inline Verdict check_lambda() {
  return verdict_le(compare(lambda_enclosure(), make_rational(3, 4)), true);
}

// binom(a+b, a) <= Z(a+b) / (Z(a) Z(b)), i.e. F(a,b) <= 1
inline Verdict check_ineq5(std::uint32_t a, std::uint32_t b) {
  return certify([&](Precision p) { return F_eval(a, b, p); },
                 [](const Interval& F) { return verdict_le(compare(F, Rational(1))); })
      .verdict;
}

// multinomial(parts) <= Z(sum) / prod Z(parts), all parts >= 1
inline Verdict check_ineq6(std::span<const std::uint32_t> parts) {
  detail::require(!parts.empty(), "check_ineq6: needs at least one part");
  std::uint32_t total = 0;
  for (auto part : parts) {
    detail::require(part >= 1, "check_ineq6: parts must be at least 1");
    total += part;
  }
  // one part: both sides are 1
  if (parts.size() == 1) return Verdict::Tight;
  Rational lhs(multinomial(total, parts));
  return certify(
             [&](Precision p) {
               Interval rhs = stirling_Z(Rational(total), p);
               for (auto part : parts) rhs = rhs / stirling_Z(Rational(part), p);
               return rhs;
             },
             [&](const Interval& rhs) { return verdict_ge(compare(rhs, lhs)); })
      .verdict;
}

// F(a,b) <= F(a+1,b)
inline Verdict check_F_monotone(std::uint32_t a, std::uint32_t b) {
  return certify([&](Precision p) { return F_eval(a + 1, b, p) - F_eval(a, b, p); },
                 [](const Interval& d) { return verdict_ge(compare(d, Rational(0))); })
      .verdict;
}

struct GChainReport {
  // printed form >= Gbar^{2a+b+2} >= 1
  Verdict printed_chain = Verdict::Inconclusive;
  // F(a+1,b)/F(a,b) >= 1, the conclusion the chain is used for
  Verdict G_at_least_one = Verdict::Inconclusive;
  // F(a+1,b)/F(a,b) >= Gbar^{2a+b+2}; false whenever b >= 2
  Verdict G_above_Gbar_power = Verdict::Inconclusive;
  // G_eval agrees with the exponent-(a+1/2) closed form (enclosures overlap)
  bool closed_form_consistent = false;
};

inline GChainReport check_G_chain(std::uint32_t a, std::uint32_t b, Precision prec = kDefaultPrecision) {
  GChainReport out;
  Rational gbar = Gbar_eval(a, b);
  Rational gbar_power = pow_int(gbar, 2 * static_cast<long>(a) + b + 2);
  Verdict gbar_ge_one = gbar >= 1 ? (gbar == 1 ? Verdict::Tight : Verdict::Holds) : Verdict::Fails;
  out.printed_chain = combine(
      certify([&](Precision p) { return G_printed(a, b, p); },
              [&](const Interval& g) { return verdict_ge(compare(g, gbar_power)); }, prec)
          .verdict,
      gbar_ge_one);
  Interval G = G_eval(a, b, prec);
  out.G_at_least_one = verdict_ge(compare(G, Rational(1)));
  out.G_above_Gbar_power = verdict_ge(compare(G, gbar_power));
  Interval closed = G_closed(a, b, prec);
  out.closed_form_consistent = compare(G - closed, Rational(0)) == Order::Unknown ||
                               compare(G - closed, Rational(0)) == Order::Equal;
  return out;
}

struct FLimitReport {
  std::vector<std::uint32_t> ns;
  std::vector<Interval> gaps;  // 1 - F(n, n)
  bool decreasing = false;
  Verdict within_tolerance = Verdict::Inconclusive;  // gap at the last n <= tolerance
};

// 1 - F(n,n) shrinks along `ns` and ends within `tolerance` of 0.
inline FLimitReport check_F_limit(std::span<const std::uint32_t> ns, const Rational& tolerance) {
  detail::require(!ns.empty(), "check_F_limit: needs at least one n");
  FLimitReport out;
  out.ns.assign(ns.begin(), ns.end());
  for (auto n : ns) out.gaps.push_back(Rational(1) - F_eval(n, n));
  out.decreasing = true;
  for (std::size_t t = 1; t < out.gaps.size(); ++t)
    out.decreasing = out.decreasing && compare(out.gaps[t] - out.gaps[t - 1], Rational(0)) == Order::Less;
  Verdict nonneg = verdict_ge(compare(out.gaps.back(), Rational(0)));
  out.within_tolerance = combine(nonneg, verdict_le(compare(out.gaps.back(), tolerance)));
  return out;
}

// ---------------------------------------------------------------------------
// Finite-difference checks of the stated derivative formulas.

using ScalarFn = std::function<Interval(const Rational&, Precision)>;

inline Interval central_first_difference(const ScalarFn& fn, const Rational& y, const Rational& step,
                                         Precision prec) {
  return (fn(y + step, prec) - fn(y - step, prec)) / (2 * step);
}

inline Interval central_second_difference(const ScalarFn& fn, const Rational& y, const Rational& step,
                                          Precision prec) {
  return (fn(y + step, prec) - Rational(2) * fn(y, prec) + fn(y - step, prec)) / (step * step);
}

struct DerivativeCheck {
  bool sign_matches = false;      // difference quotient has the stated sign
  bool second_order = false;      // error shrinks ~4x under step halving
  double error_ratio = 0.0;
};

namespace detail {

inline double abs_hi(const Interval& x) {
  return std::max(std::abs(x.lo_double()), std::abs(x.hi_double()));
}

inline DerivativeCheck derivative_check(const Interval& fd_coarse, const Interval& fd_fine,
                                        const Interval& exact, int expected_sign) {
  DerivativeCheck out;
  auto signed_ok = [&](const Interval& v) {
    return expected_sign < 0 ? v.strictly_negative() : v.strictly_positive();
  };
  out.sign_matches = signed_ok(fd_coarse) && signed_ok(fd_fine) && signed_ok(exact);
  double coarse = abs_hi(fd_coarse - exact);
  double fine = abs_hi(fd_fine - exact);
  out.error_ratio = coarse > 0 ? fine / coarse : 0.0;
  // second-order convergence: ratio near 1/4
  out.second_order = coarse > 0 && out.error_ratio > 0.15 && out.error_ratio < 0.35;
  return out;
}

}  // namespace detail

// f_x'' < 0 with central second differences at steps y/16 and y/32.
inline DerivativeCheck check_f_concavity(const Rational& x, const Rational& y,
                                         Precision prec = 256) {
  ScalarFn f = [&](const Rational& t, Precision p) { return f_eval(x, t, p); };
  Rational h = y / 16;
  return detail::derivative_check(central_second_difference(f, y, h, prec),
                                  central_second_difference(f, y, h / 2, prec),
                                  Interval(f_second_derivative(x, y), prec), -1);
}

inline DerivativeCheck check_g_convexity(const Rational& y, Precision prec = 256) {
  ScalarFn g = [](const Rational& t, Precision p) { return g_eval(t, p); };
  Rational h = y / 16;
  return detail::derivative_check(central_second_difference(g, y, h, prec),
                                  central_second_difference(g, y, h / 2, prec),
                                  Interval(g_second_derivative(y), prec), +1);
}

inline DerivativeCheck check_h_decreasing(const Rational& y, Precision prec = 256) {
  ScalarFn h = [](const Rational& t, Precision p) { return h_eval(t, p); };
  Rational step = y / 16;
  return detail::derivative_check(central_first_difference(h, y, step, prec),
                                  central_first_difference(h, y, step / 2, prec),
                                  h_derivative(y, prec), -1);
}

inline DerivativeCheck check_hbar_decreasing(const Rational& y, Precision prec = 256) {
  ScalarFn h = [](const Rational& t, Precision p) { return hbar_eval(t, p); };
  Rational step = y / 16;
  return detail::derivative_check(central_first_difference(h, y, step, prec),
                                  central_first_difference(h, y, step / 2, prec),
                                  hbar_derivative(y, prec), -1);
}

// ---------------------------------------------------------------------------
// Grid battery.

struct InequalityGrid {
  std::string name;
  std::vector<Rational> ineq1_points;  // used for both x and y
  std::vector<Rational> ineq2_points;
  std::vector<Rational> ineq3_points;
  std::vector<Rational> ineq4_points;
  std::uint32_t ineq5_max = 40;
  std::uint32_t ineq6_samples = 200;
  std::uint32_t ineq6_max_parts = 6;
  std::uint32_t ineq6_max_value = 12;
  std::uint32_t G_chain_max = 20;
  std::uint32_t Gbar_identity_max = 30;

  static InequalityGrid standard() {
    InequalityGrid g;
    g.name = "default";
    for (int e = -3; e <= 6; ++e) g.ineq1_points.push_back(pow_int(Rational(2), e));
    for (int e = -3; e <= 10; ++e) g.ineq2_points.push_back(pow_int(Rational(2), e));
    for (int twice = 8; twice <= 128; ++twice) g.ineq3_points.push_back(make_rational(twice, 2));
    for (int y = 7; y <= 64; ++y) g.ineq4_points.push_back(Rational(y));
    return g;
  }

  static InequalityGrid dense() {
    InequalityGrid g = standard();
    g.name = "dense";
    for (int j = 1; j <= 48; ++j) g.ineq1_points.push_back(make_rational(j, 8));
    for (int j = 1; j <= 256; ++j) g.ineq2_points.push_back(make_rational(j, 16));
    for (int j = 33; j <= 512; ++j) g.ineq3_points.push_back(make_rational(j, 8));
    for (int j = 57; j <= 512; ++j) g.ineq4_points.push_back(make_rational(j, 8));
    g.ineq6_samples = 1000;
    return g;
  }
};

struct ManifestEntry {
  std::string name;
  std::uint64_t cases = 0;
  Verdict verdict = Verdict::Holds;
  std::string first_failure;  // empty when every case passed
};

namespace detail {

class ManifestBuilder {
 public:
  explicit ManifestBuilder(std::string name) { entry_.name = std::move(name); }
  void record(Verdict v, const std::string& where) {
    ++entry_.cases;
    if (!accepted(v) && entry_.first_failure.empty()) entry_.first_failure = where;
    entry_.verdict = combine(entry_.verdict, v);
  }
  void record(bool ok, const std::string& where) { record(ok ? Verdict::Holds : Verdict::Fails, where); }
  ManifestEntry done() && { return std::move(entry_); }

 private:
  ManifestEntry entry_;
};

inline std::string q(const Rational& r) { return to_fraction_string(r); }

}  // namespace detail

// Runs every check on the grid. Random part-vectors for the multinomial
// inequality are drawn from SampleEngine(seed).
inline std::vector<ManifestEntry> verify_inequalities(const InequalityGrid& grid, std::uint64_t seed) {
  using detail::ManifestBuilder;
  using detail::q;
  std::vector<ManifestEntry> out;

  {
    ManifestBuilder b("ineq1");
    for (const auto& x : grid.ineq1_points)
      for (const auto& y : grid.ineq1_points) b.record(check_ineq1(x, y), "x=" + q(x) + " y=" + q(y));
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("ineq1_concavity");
    for (const auto& x : grid.ineq1_points)
      for (const auto& y : grid.ineq1_points) {
        auto c = check_f_concavity(x, y);
        b.record(c.sign_matches && c.second_order, "x=" + q(x) + " y=" + q(y));
      }
    out.push_back(std::move(b).done());
  }
  {
    // the gap x - f_x(y) shrinks toward 0 as y grows
    ManifestBuilder b("ineq1_limit");
    for (const auto& x : grid.ineq1_points) {
      Interval near = Interval(x, kDefaultPrecision) - f_eval(x, Rational(100));
      Interval far = Interval(x, kDefaultPrecision) - f_eval(x, Rational(10000));
      b.record(far.strictly_positive() && compare(far - near, Rational(0)) == Order::Less, "x=" + q(x));
    }
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("ineq2");
    for (const auto& y : grid.ineq2_points) b.record(check_ineq2(y), "y=" + q(y));
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("ineq2_convexity");
    for (const auto& y : grid.ineq2_points) {
      auto c = check_g_convexity(y);
      b.record(c.sign_matches && c.second_order, "y=" + q(y));
    }
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("ineq2_limit");
    Interval near = g_eval(Rational(100)) - Rational(1);
    Interval far = g_eval(Rational(10000)) - Rational(1);
    b.record(far.strictly_positive() && compare(far - near, Rational(0)) == Order::Less, "y=10^2,10^4");
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("ineq3");
    for (const auto& y : grid.ineq3_points) b.record(check_ineq3(y), "y=" + q(y));
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("ineq3_equality_at_4");
    b.record(check_ineq3(Rational(4)) == Verdict::Tight, "y=4 exact");
    b.record(ineq3_rhs_literal(Rational(4)).contains(Rational(128)), "y=4 literal form");
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("ineq4");
    for (const auto& y : grid.ineq4_points) b.record(check_ineq4(y), "y=" + q(y));
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("lambda");
    b.record(check_lambda(), "lambda < 3/4");
    Interval lambda = lambda_enclosure();
    b.record(compare(lambda, make_rational(71, 100)) == Order::Greater &&
                 compare(lambda, make_rational(72, 100)) == Order::Less,
             "0.71 < lambda < 0.72");
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("h_values");
    Interval pi = pi_enclosure();
    Interval at4 = exp(h_eval(Rational(4))) - Rational(16) / pow_int(pi, 3);
    b.record(at4.contains(Rational(0)) && at4.width() < make_rational(1, 1L << 40),
             "exp(h(4)) = 16/pi^3");
    Interval lambda = lambda_enclosure();
    b.record((exp(h_eval(Rational(4))) - lambda * lambda).contains(Rational(0)), "exp(h(4)) = lambda^2");
    b.record(compare(h_eval(Rational(5)) - h_eval(Rational(4)), Rational(0)) == Order::Less, "h(5) < h(4)");
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("hbar_values");
    Interval pi = pi_enclosure();
    Interval e7 = exp(hbar_eval(Rational(7)));
    b.record((e7 - Rational(16807) / (Rational(32) * pow_int(pi, 6))).contains(Rational(0)),
             "exp(hbar(7)) = 7^5/(32 pi^6)");
    b.record(verdict_le(compare(e7, Rational(1)), true), "exp(hbar(7)) < 1");
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("h_decreasing");
    for (int y = 4; y <= 64; ++y) {
      auto c = check_h_decreasing(Rational(y));
      b.record(c.sign_matches && c.second_order, "y=" + std::to_string(y));
    }
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("hbar_decreasing");
    for (int y = 7; y <= 64; ++y) {
      auto c = check_hbar_decreasing(Rational(y));
      b.record(c.sign_matches && c.second_order, "y=" + std::to_string(y));
    }
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("ineq5");
    for (std::uint32_t a = 1; a <= grid.ineq5_max; ++a)
      for (std::uint32_t c = 1; c <= grid.ineq5_max; ++c)
        b.record(check_ineq5(a, c), "a=" + std::to_string(a) + " b=" + std::to_string(c));
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("ineq6");
    for (std::uint32_t m = 2; m <= 10; ++m) {
      std::vector<std::uint32_t> ones(m, 1);
      b.record(check_ineq6(ones), "ones m=" + std::to_string(m));
    }
    SampleEngine engine(seed);
    for (std::uint32_t s = 0; s < grid.ineq6_samples; ++s) {
      auto m = static_cast<std::uint32_t>(2 + uniform_below(engine, grid.ineq6_max_parts - 1));
      std::vector<std::uint32_t> parts(m);
      std::string where = "parts=";
      for (auto& part : parts) {
        part = static_cast<std::uint32_t>(1 + uniform_below(engine, grid.ineq6_max_value));
        where += std::to_string(part) + ",";
      }
      b.record(check_ineq6(parts), where);
    }
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("F_monotone");
    for (std::uint32_t a = 1; a <= grid.ineq5_max; ++a)
      for (std::uint32_t c = 1; c <= grid.ineq5_max; ++c)
        b.record(check_F_monotone(a, c), "a=" + std::to_string(a) + " b=" + std::to_string(c));
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("G_chain");
    for (std::uint32_t a = 1; a <= grid.G_chain_max; ++a)
      for (std::uint32_t c = 1; c <= grid.G_chain_max; ++c) {
        auto r = check_G_chain(a, c);
        b.record(combine(r.printed_chain, r.G_at_least_one), "a=" + std::to_string(a) + " b=" + std::to_string(c));
        b.record(r.closed_form_consistent, "closed form a=" + std::to_string(a) + " b=" + std::to_string(c));
      }
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("Gbar_identity");
    for (std::uint32_t a = 1; a <= grid.Gbar_identity_max; ++a)
      for (std::uint32_t c = 1; c <= grid.Gbar_identity_max; ++c)
        b.record(Gbar_eval(a, c) == Gbar_harmonic(a, c), "a=" + std::to_string(a) + " b=" + std::to_string(c));
    out.push_back(std::move(b).done());
  }
  {
    ManifestBuilder b("F_limit");
    const std::uint32_t ns[] = {4, 8, 16, 32, 64};
    auto r = check_F_limit(ns, make_rational(1, 100));
    b.record(r.decreasing, "1-F(n,n) decreasing");
    b.record(r.within_tolerance, "|1-F(64,64)| <= 0.01");
    const std::uint32_t off[] = {4, 8, 16, 32};
    bool off_decreasing = true;
    for (std::size_t t = 1; t < std::size(off); ++t)
      off_decreasing = off_decreasing &&
                       compare((Rational(1) - F_eval(off[t], 2 * off[t])) -
                                   (Rational(1) - F_eval(off[t - 1], 2 * off[t - 1])),
                               Rational(0)) == Order::Less;
    b.record(off_decreasing, "1-F(n,2n) decreasing");
    out.push_back(std::move(b).done());
  }
  return out;
}

inline Verdict manifest_verdict(std::span<const ManifestEntry> entries) {
  Verdict v = Verdict::Holds;
  for (const auto& e : entries) v = combine(v, e.verdict);
  return v;
}

}  // namespace zimin
