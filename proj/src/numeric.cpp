#include "tropcy/numeric.hpp"

#include <cmath>
#include <cstdint>

namespace tropcy {

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return Rat(num, den);
  }
  auto dotpos = s.find('.');
  auto epos = s.find_first_of("eE");
  if (dotpos == std::string::npos && epos == std::string::npos) return Rat(Int(s));
  // decimal notation, possibly with exponent
  std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
  long expo = epos == std::string::npos ? 0 : std::stol(s.substr(epos + 1));
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false;
  for (char c : mant) {
    if (c == '.') {
      if (seen_dot) throw Error("malformed number '" + s + "'");
      seen_dot = true;
      continue;
    }
    digits.push_back(c);
    if (seen_dot) ++frac_digits;
  }
  Rat r{Int(digits)};
  long net = expo - frac_digits;
  Int ten = 10;
  for (long i = 0; i < std::labs(net); ++i) {
    if (net > 0) r *= ten;
    else r /= ten;
  }
  return r;
}

std::string rational_to_string(const Rat& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rat rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error("non-finite value");
  if (x == 0.0) return Rat(0);
  int expo = 0;
  double mant = std::frexp(x, &expo);  // x = mant * 2^expo, |mant| in [0.5, 1)
  std::int64_t m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  expo -= 53;
  Rat r(m);
  Int two = 2;
  for (int i = 0; i < std::abs(expo); ++i) {
    if (expo > 0) r *= two;
    else r /= two;
  }
  return r;
}

Rat snap_to_grid(double x, int bits) {
  double scaled = std::ldexp(x, bits);
  double rounded = std::nearbyint(scaled);
  Rat num = rational_from_double(rounded);
  Int den = Int(1) << bits;
  return num / Rat(den);
}

}  // namespace tropcy
