#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ratblow {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (spec strings, coordinate lists, rationals).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Rounds toward zero only when exact; throws otherwise.
inline Integer to_integer(const Rational& r) {
  if (!is_integer(r)) throw Error("value " + r.get_str() + " is not an integer");
  return r.get_num();
}

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("integer " + z.get_str() + " out of range");
  return z.get_si();
}

/// "num/den" (or "num" when the denominator is 1).
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'", 0);
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", s.find('/'));
  r.canonicalize();
  return r;
}

/// Non-negative representative of a mod m.
inline long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

/// 2^k for any integer k, exactly.
inline Rational pow2(long k) {
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rational(big);
  Rational r(Integer(1), big);
  r.canonicalize();
  return r;
}

}  // namespace ratblow
