#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "zimin/arith/rational.hpp"
#include "zimin/errors.hpp"

namespace zimin {

// ell! / prod(parts_j!), exactly.
inline BigInt multinomial(std::uint32_t ell, std::span<const std::uint32_t> parts) {
  std::uint64_t total = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
  detail::require(total == ell, "multinomial: parts must sum to ell");
  BigInt out = factorial(ell);
  for (auto part : parts) out /= factorial(part);
  return out;
}

inline BigInt multinomial(std::uint32_t ell, std::initializer_list<std::uint32_t> parts) {
  return multinomial(ell, std::span<const std::uint32_t>(parts.begin(), parts.size()));
}

// All m-compositions of ell that are permutations of one another, collapsed.
struct CompositionGroup {
  std::vector<std::uint32_t> parts;  // non-increasing, length m, zero-padded
  BigInt count;                      // number of distinct m-compositions
  BigInt multinomial;                // ell! / prod(parts!)
};

namespace detail {

// Number of distinct orderings of a sorted multiset: m! / prod(run lengths!).
inline BigInt arrangements(std::span<const std::uint32_t> sorted_parts) {
  BigInt out = factorial(sorted_parts.size());
  std::size_t run = 1;
  for (std::size_t i = 1; i <= sorted_parts.size(); ++i) {
    if (i < sorted_parts.size() && sorted_parts[i] == sorted_parts[i - 1]) {
      ++run;
    } else {
      out /= factorial(run);
      run = 1;
    }
  }
  return out;
}

}  // namespace detail

// Visits every partition of ell into at most m parts (zero-padded to m),
// with its composition count and multinomial. Factorials up to ell are
// tabulated once per call.
inline void for_each_composition_group(std::uint32_t ell, std::uint32_t m,
                                       const std::function<void(const CompositionGroup&)>& visit) {
  detail::require(m >= 1, "compositions_grouped: m must be positive");
  std::vector<BigInt> fact(ell + 1);
  fact[0] = 1;
  for (std::uint32_t n = 1; n <= ell; ++n) fact[n] = fact[n - 1] * n;

  CompositionGroup group;
  group.parts.assign(m, 0);
  const BigInt ell_fact = fact[ell];

  // parts[idx] <= cap, remaining mass `left` still to place in slots idx..m-1
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> place =
      [&](std::uint32_t idx, std::uint32_t left, std::uint32_t cap) {
        if (left == 0) {
          for (std::uint32_t j = idx; j < m; ++j) group.parts[j] = 0;
          group.count = detail::arrangements(group.parts);
          BigInt denom = 1;
          for (std::uint32_t j = 0; j < idx; ++j) denom *= fact[group.parts[j]];
          group.multinomial = ell_fact / denom;
          visit(group);
          return;
        }
        if (idx == m) return;
        // the remaining slots must be able to absorb `left` with parts <= v
        std::uint32_t slots = m - idx;
        std::uint32_t lowest = (left + slots - 1) / slots;
        for (std::uint32_t v = std::min(cap, left); v >= lowest && v >= 1; --v) {
          group.parts[idx] = v;
          place(idx + 1, left - v, v);
        }
      };
  place(0, ell, ell);
}

inline std::vector<CompositionGroup> compositions_grouped(std::uint32_t ell, std::uint32_t m) {
  std::vector<CompositionGroup> out;
  for_each_composition_group(ell, m, [&](const CompositionGroup& g) { out.push_back(g); });
  return out;
}

// C(n, k) exactly.
inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace zimin
