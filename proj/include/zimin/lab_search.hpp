#pragma once

#include <cstdint>
#include <optional>

#include "zimin/words.hpp"

namespace zimin {

// Outcome of the brute-force abelian Ramsey length search.
struct LabResult {
  bool exceeds_cap = false;
  // least L such that every length-L word contains the pattern; valid when
  // !exceeds_cap
  std::uint64_t length = 0;
  // a longest avoiding word found (length L-1, or cap when exceeds_cap)
  Word longest_avoider;
  std::uint64_t nodes_visited = 0;
};

namespace detail {

class AvoiderSearch {
 public:
  AvoiderSearch(std::uint32_t m, Pattern pattern, std::uint64_t cap)
      : m_(m), pattern_(std::move(pattern)), cap_(cap), word_({}, m) {}

  LabResult run() {
    best_ = word_;
    grow(0);
    LabResult out;
    out.longest_avoider = best_;
    out.nodes_visited = nodes_;
    out.exceeds_cap = best_.size() >= cap_;
    out.length = out.exceeds_cap ? 0 : best_.size() + 1;
    return out;
  }

 private:
  // Letters are introduced in increasing order (first occurrence of letter c
  // comes after that of c-1); avoidance is invariant under renaming letters.
  bool grow(std::uint32_t letters_used) {
    ++nodes_;
    if (word_.size() > best_.size()) best_ = word_;
    if (word_.size() >= cap_) return true;
    std::uint32_t limit = std::min(m_, letters_used + 1);
    for (Letter c = 0; c < limit; ++c) {
      word_.push_back(c);
      // only occurrences ending at the new letter can be new
      bool avoids = !contains_abelian_ending_at(word_, pattern_, word_.size());
      if (avoids && grow(std::max(letters_used, c + 1))) return true;
      word_.pop_back();
    }
    return false;
  }

  std::uint32_t m_;
  Pattern pattern_;
  std::uint64_t cap_;
  Word word_;
  Word best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Least L such that every word of length L over m letters contains Z_i in the
// abelian sense, by depth-first extension of avoiding words. Stops with
// exceeds_cap once an avoiding word of length `cap` is found.
inline LabResult lab_bruteforce(std::uint32_t m, std::uint32_t i, std::uint64_t cap) {
  detail::require(m >= 1, "lab_bruteforce: alphabet size must be positive");
  detail::require(cap >= 1, "lab_bruteforce: cap must be positive");
  return detail::AvoiderSearch(m, zimin(i), cap).run();
}

}  // namespace zimin
