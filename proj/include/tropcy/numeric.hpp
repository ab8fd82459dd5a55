#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tropcy {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

/// Library-wide error with a human readable message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw Error("expected integer, got " + q.str());
  return numerator(q);
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

inline Int floor_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

/// Parses "p", "p/q" or a decimal string like "-1.25" into an exact rational.
Rat parse_rational(const std::string& s);

/// Serializes as "p" or "p/q" (lossless).
std::string rational_to_string(const Rat& q);

/// Exact rational from a double (doubles are dyadic rationals).
Rat rational_from_double(double x);

/// Rounds x to a dyadic rational with denominator 2^bits.
Rat snap_to_grid(double x, int bits);

}  // namespace tropcy
