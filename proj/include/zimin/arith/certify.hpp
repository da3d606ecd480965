#pragma once

#include <string_view>

#include "zimin/arith/interval.hpp"

namespace zimin {

// Outcome of checking one claimed inequality.
//   Holds        the claim is certified strictly at the working precision
//   Tight        both sides are provably equal (claim is non-strict)
//   Fails        the claim is certified false
//   Inconclusive the enclosures overlap at the precision cap
enum class Verdict { Holds, Tight, Fails, Inconclusive };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Tight: return "tight";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

inline bool accepted(Verdict v) { return v == Verdict::Holds || v == Verdict::Tight; }

// AND-fold: any failure dominates, then inconclusive, then strict holds.
inline Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fails || b == Verdict::Fails) return Verdict::Fails;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  if (a == Verdict::Tight || b == Verdict::Tight) return Verdict::Tight;
  return Verdict::Holds;
}

// Verdict for the claim "lhs <= rhs" (or "lhs < rhs" when strict).
inline Verdict verdict_le(Order lhs_vs_rhs, bool strict = false) {
  switch (lhs_vs_rhs) {
    case Order::Less: return Verdict::Holds;
    case Order::Equal: return strict ? Verdict::Fails : Verdict::Tight;
    case Order::Greater: return Verdict::Fails;
    case Order::Unknown: return Verdict::Inconclusive;
  }
  return Verdict::Inconclusive;
}

inline Verdict verdict_ge(Order lhs_vs_rhs, bool strict = false) {
  switch (lhs_vs_rhs) {
    case Order::Greater: return Verdict::Holds;
    case Order::Equal: return strict ? Verdict::Fails : Verdict::Tight;
    case Order::Less: return Verdict::Fails;
    case Order::Unknown: return Verdict::Inconclusive;
  }
  return Verdict::Inconclusive;
}

template <class T>
struct Certified {
  T value;
  Verdict verdict;
  Precision precision;
};

// Re-evaluates `evaluate(prec)` at doubling precision, starting from `start`,
// until `judge(value)` is conclusive or the cap is reached.
template <class Evaluate, class Judge>
auto certify(Evaluate evaluate, Judge judge, Precision start = kDefaultPrecision,
             Precision cap = kPrecisionCap) -> Certified<decltype(evaluate(start))> {
  Precision prec = start;
  for (;;) {
    auto value = evaluate(prec);
    Verdict v = judge(value);
    if (v != Verdict::Inconclusive || prec * 2 > cap) return {std::move(value), v, prec};
    prec *= 2;
  }
}

}  // namespace zimin
