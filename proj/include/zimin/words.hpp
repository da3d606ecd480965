#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zimin/errors.hpp"

namespace zimin {

using Letter = std::uint32_t;
using Variable = std::uint32_t;

// A finite word over {0, ..., alphabet_size-1}. `glyphs`, when non-empty,
// maps letter indices back to characters for rendering.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> letters, std::uint32_t alphabet_size, std::string glyphs = {})
      : letters_(std::move(letters)), alphabet_size_(alphabet_size), glyphs_(std::move(glyphs)) {
    for (Letter l : letters_)
      detail::require(l < alphabet_size_, "word letter outside its alphabet");
    detail::require(glyphs_.empty() || glyphs_.size() == alphabet_size_,
                    "glyph table does not match alphabet size");
  }

  // Letters numbered in order of first appearance in `text`.
  static Word from_text(std::string_view text) {
    std::string glyphs;
    std::vector<Letter> letters;
    for (char c : text) {
      auto at = glyphs.find(c);
      if (at == std::string::npos) {
        at = glyphs.size();
        glyphs.push_back(c);
      }
      letters.push_back(static_cast<Letter>(at));
    }
    auto size = static_cast<std::uint32_t>(glyphs.size());
    return Word(std::move(letters), size, std::move(glyphs));
  }

  // Letters numbered by their position in a fixed alphabet string.
  static Word from_text(std::string_view text, std::string_view alphabet) {
    std::vector<Letter> letters;
    for (char c : text) {
      auto at = alphabet.find(c);
      detail::require(at != std::string_view::npos, std::string("letter not in alphabet: ") + c);
      letters.push_back(static_cast<Letter>(at));
    }
    return Word(std::move(letters), static_cast<std::uint32_t>(alphabet.size()),
                std::string(alphabet));
  }

  // "0,1,1,0"; the alphabet is {0..max} unless a larger size is given.
  static Word from_csv(std::string_view text, std::uint32_t alphabet_size = 0) {
    std::vector<Letter> letters;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      detail::require(!item.empty() && item.find_first_not_of("0123456789") == std::string::npos,
                      "malformed letter index: '" + item + "'");
      letters.push_back(static_cast<Letter>(std::stoul(item)));
    }
    std::uint32_t needed = letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end()) + 1;
    return Word(std::move(letters), std::max(alphabet_size, needed));
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::uint32_t alphabet_size() const { return alphabet_size_; }
  const std::string& glyphs() const { return glyphs_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word factor(std::size_t start, std::size_t length) const {
    detail::require(start + length <= letters_.size(), "factor out of range");
    return Word(std::vector<Letter>(letters_.begin() + start, letters_.begin() + start + length),
                alphabet_size_, glyphs_);
  }

  void push_back(Letter l) {
    detail::require(l < alphabet_size_, "word letter outside its alphabet");
    letters_.push_back(l);
  }
  void pop_back() { letters_.pop_back(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (!glyphs_.empty()) {
        out.push_back(glyphs_[letters_[i]]);
      } else {
        if (i) out.push_back(',');
        out += std::to_string(letters_[i]);
      }
    }
    return out;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_size_ == b.alphabet_size_ && a.letters_ == b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  std::uint32_t alphabet_size_ = 0;
  std::string glyphs_;
};

// Sequence of pattern variables v_1, v_2, ... (indices are 1-based).
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<Variable> symbols) : symbols_(std::move(symbols)) {
    for (Variable v : symbols_) detail::require(v >= 1, "pattern variables are numbered from 1");
  }

  // Each distinct character becomes a variable, numbered by first appearance:
  // "aab" -> v1 v1 v2.
  static Pattern from_text(std::string_view text) {
    std::string seen;
    std::vector<Variable> symbols;
    for (char c : text) {
      auto at = seen.find(c);
      if (at == std::string::npos) {
        at = seen.size();
        seen.push_back(c);
      }
      symbols.push_back(static_cast<Variable>(at + 1));
    }
    return Pattern(std::move(symbols));
  }

  const std::vector<Variable>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (i) out.push_back(' ');
      out += "v" + std::to_string(symbols_[i]);
    }
    return out;
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::vector<Variable> symbols_;
};

struct ParikhVector {
  std::vector<std::uint32_t> counts;
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

inline ParikhVector parikh(const Word& w) {
  ParikhVector out{std::vector<std::uint32_t>(w.alphabet_size(), 0)};
  for (Letter l : w.letters()) ++out.counts[l];
  return out;
}

inline bool abelian_equiv(const Word& u, const Word& w) {
  detail::require(u.alphabet_size() == w.alphabet_size(),
                  "abelian_equiv: words over different alphabets");
  return parikh(u) == parikh(w);
}

// Z_1 = v1, Z_{i+1} = Z_i v_{i+1} Z_i.
inline Pattern zimin(std::uint32_t i) {
  detail::require(i >= 1, "zimin: index must be at least 1");
  std::vector<Variable> z{1};
  for (Variable v = 2; v <= i; ++v) {
    std::vector<Variable> next = z;
    next.push_back(v);
    next.insert(next.end(), z.begin(), z.end());
    z = std::move(next);
  }
  return Pattern(std::move(z));
}

// Factor start plus one non-empty segment per pattern symbol.
struct Witness {
  std::size_t start = 0;
  std::vector<Word> segments;

  std::size_t length() const {
    std::size_t n = 0;
    for (const auto& s : segments) n += s.size();
    return n;
  }

  std::string to_string(char separator = '|') const {
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      if (i) out.push_back(separator);
      out += segments[i].to_string();
    }
    return out;
  }
};

namespace detail {

// Backtracking search for an abelian occurrence of a pattern in one word.
// Prefix Parikh sums make every segment comparison O(alphabet).
class AbelianMatcher {
 public:
  AbelianMatcher(const Word& w, const Pattern& p) : word_(w), m_(w.alphabet_size()) {
    require(!p.empty(), "contains_abelian: pattern must be non-empty");
    std::unordered_map<Variable, std::uint32_t> dense;
    for (Variable v : p.symbols()) {
      auto [it, inserted] = dense.try_emplace(v, static_cast<std::uint32_t>(dense.size()));
      symbols_.push_back(it->second);
    }
    length_.assign(dense.size(), 0);
    origin_.assign(dense.size(), 0);
    cuts_.assign(symbols_.size() + 1, 0);
    prefix_.assign((w.size() + 1) * m_, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::copy_n(prefix_.begin() + i * m_, m_, prefix_.begin() + (i + 1) * m_);
      ++prefix_[(i + 1) * m_ + w[i]];
    }
  }

  // First occurrence whose factor starts at `start`; if `end` is set the
  // factor must end exactly there.
  bool match_from(std::size_t start, std::optional<std::size_t> end) {
    end_ = end;
    limit_ = end.value_or(word_.size());
    cuts_[0] = start;
    return extend(0, start);
  }

  Witness witness() const {
    Witness out{cuts_[0], {}};
    for (std::size_t j = 0; j < symbols_.size(); ++j)
      out.segments.push_back(word_.factor(cuts_[j], cuts_[j + 1] - cuts_[j]));
    return out;
  }

 private:
  bool same_parikh(std::size_t a, std::size_t b, std::size_t len) const {
    for (std::uint32_t c = 0; c < m_; ++c) {
      if (prefix_[(a + len) * m_ + c] - prefix_[a * m_ + c] !=
          prefix_[(b + len) * m_ + c] - prefix_[b * m_ + c])
        return false;
    }
    return true;
  }

  std::size_t min_rest(std::size_t j) const {
    std::size_t need = 0;
    for (std::size_t k = j; k < symbols_.size(); ++k) {
      std::size_t len = length_[symbols_[k]];
      need += len ? len : 1;
    }
    return need;
  }

  bool extend(std::size_t j, std::size_t pos) {
    if (j == symbols_.size()) return !end_ || pos == *end_;
    const std::uint32_t v = symbols_[j];
    if (std::size_t len = length_[v]) {
      if (pos + len > limit_ || !same_parikh(origin_[v], pos, len)) return false;
      cuts_[j + 1] = pos + len;
      return extend(j + 1, pos + len);
    }
    std::size_t rest = min_rest(j + 1);
    if (pos + 1 + rest > limit_) return false;
    std::size_t max_len = limit_ - pos - rest;
    std::size_t min_len = 1;
    // a fresh trailing variable is unconstrained: it takes the rest of the word
    if (j + 1 == symbols_.size()) min_len = max_len;
    for (std::size_t len = min_len; len <= max_len; ++len) {
      length_[v] = len;
      origin_[v] = pos;
      cuts_[j + 1] = pos + len;
      if (extend(j + 1, pos + len)) return true;
    }
    length_[v] = 0;
    return false;
  }

  const Word& word_;
  std::uint32_t m_;
  std::vector<std::uint32_t> symbols_;
  std::vector<std::size_t> length_, origin_, cuts_;
  std::vector<std::uint32_t> prefix_;
  std::optional<std::size_t> end_;
  std::size_t limit_ = 0;
};

}  // namespace detail

// Exhaustive search for an abelian occurrence of `p` in `w`. Factor starts
// are tried left to right and split points shortest-first; a trailing
// segment whose variable is not repeated extends to the end of the word.
inline std::optional<Witness> contains_abelian(const Word& w, const Pattern& p) {
  detail::AbelianMatcher matcher(w, p);
  for (std::size_t start = 0; start + p.size() <= w.size(); ++start) {
    if (matcher.match_from(start, std::nullopt)) return matcher.witness();
  }
  return std::nullopt;
}

// Occurrences whose factor ends exactly at position `end` (exclusive).
inline std::optional<Witness> contains_abelian_ending_at(const Word& w, const Pattern& p,
                                                         std::size_t end) {
  detail::require(end <= w.size(), "contains_abelian_ending_at: end past the word");
  detail::AbelianMatcher matcher(w, p);
  for (std::size_t start = 0; start + p.size() <= end; ++start) {
    if (matcher.match_from(start, end)) return matcher.witness();
  }
  return std::nullopt;
}

// Checks a witness against the containment definition from scratch.
inline bool validate_witness(const Word& w, const Pattern& p, const Witness& witness) {
  if (witness.segments.size() != p.size()) return false;
  std::size_t pos = witness.start;
  for (const Word& seg : witness.segments) {
    if (seg.empty() || pos + seg.size() > w.size()) return false;
    if (!(w.factor(pos, seg.size()) == seg)) return false;
    pos += seg.size();
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p.symbols()[i] == p.symbols()[j] &&
          !abelian_equiv(witness.segments[i], witness.segments[j]))
        return false;
  return true;
}

}  // namespace zimin
