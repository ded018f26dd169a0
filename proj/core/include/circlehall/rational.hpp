#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace circlehall {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct bound_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p/q" or "p"; reduced sign-normalized output.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

inline long long to_ll(const Int& n) { return n.convert_to<long long>(); }

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat_floor(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return Rat(q);
}
inline Rat rat_frac(const Rat& r) { return r - rat_floor(r); }

Int lcm_int(const Int& a, const Int& b);

}  // namespace circlehall
