#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace latpolar {

// Arbitrary-precision integer and exact rational. All arithmetic in this
// library is exact; nothing is ever rounded to floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Integer extended with +infinity, the codomain of the discrete Legendre
// transform. nullopt encodes +infinity.
using ExtInt = std::optional<Int>;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

// Largest integer <= r.
inline Int floor_rat(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

// Smallest integer >= r.
inline Int ceil_rat(const Rat& r) {
  Int n = numerator(r), d = denominator(r);
  Int q = n / d;
  if (n > 0 && q * d != n) ++q;
  return q;
}

// Canonical "num/den" form, e.g. "1/5", "-3/5", "0/1".
inline std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses the canonical "num/den" form; also accepts a bare integer.
std::optional<Rat> rat_from_string(const std::string& s);

}  // namespace latpolar
