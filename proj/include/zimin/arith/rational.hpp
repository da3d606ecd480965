#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "zimin/errors.hpp"

namespace zimin {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ContractError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(BigInt(num), BigInt(den));
}

// Parses "p", "p/q", or a finite decimal such as "0.125" / "-3.5".
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ContractError("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 ||
        den.set_str(text.substr(slash + 1), 10) != 0)
      throw ContractError("malformed rational: " + text);
    return make_rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt num;
    if (digits == "-" || digits.empty() || num.set_str(digits, 10) != 0)
      throw ContractError("malformed decimal: " + text);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    return make_rational(num, den);
  }
  BigInt num;
  if (num.set_str(text, 10) != 0) throw ContractError("malformed integer: " + text);
  return Rational(num);
}

inline BigInt pow_int(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

// base^exponent for a signed exponent; base must be non-zero when exponent < 0.
inline Rational pow_int(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return pow_int(Rational(1) / base, -exponent);
  }
  Rational out(pow_int(BigInt(base.get_num()), static_cast<unsigned long>(exponent)),
               pow_int(BigInt(base.get_den()), static_cast<unsigned long>(exponent)));
  out.canonicalize();
  return out;
}

inline BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

enum class DecimalRounding { HalfEven, Floor, Ceil };

// Fixed-point rendering with `digits` places after the point. Trailing zeros
// are trimmed; the result is exact iff the rational terminates within digits.
inline std::string to_decimal(const Rational& q, unsigned digits,
                              DecimalRounding mode = DecimalRounding::HalfEven) {
  BigInt scale = pow_int(BigInt(10), digits);
  BigInt num = q.get_num() * scale;
  const BigInt& den = q.get_den();
  BigInt scaled;
  switch (mode) {
    case DecimalRounding::Floor: scaled = floor_div(num, den); break;
    case DecimalRounding::Ceil: scaled = ceil_div(num, den); break;
    case DecimalRounding::HalfEven: {
      BigInt lower = floor_div(num, den);
      BigInt twice_rem = 2 * (num - lower * den);
      int c = cmp(twice_rem, den);
      scaled = lower;
      if (c > 0 || (c == 0 && mpz_odd_p(lower.get_mpz_t()))) scaled += 1;
      break;
    }
  }
  bool negative = scaled < 0;
  BigInt magnitude = abs(scaled);
  std::string s = magnitude.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string int_part = s.substr(0, s.size() - digits);
  std::string frac_part = s.substr(s.size() - digits);
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
  std::string out = negative ? "-" : "";
  out += int_part;
  if (!frac_part.empty()) out += "." + frac_part;
  return out;
}

}  // namespace zimin
