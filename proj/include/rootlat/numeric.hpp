#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace rootlat {

// All lattice arithmetic is exact: arbitrary-precision integers and
// reduced fractions with positive denominators (cpp_rational keeps the
// canonical form on its own).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rat& q) { return den(q) == 1; }

inline bool is_integral(const RatVector& v) {
  for (const Rat& q : v)
    if (!is_integral(q)) return false;
  return true;
}

// Floored division: quotient rounded toward minus infinity.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;                     // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// Representative of q mod 1 in [0, 1).
inline Rat mod_one(const Rat& q) {
  Int fl = floor_div(num(q), den(q));
  return q - Rat(fl);
}

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& q) {
  if (is_integral(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

inline std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

inline RatVector to_rat(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline IntVector to_int(const RatVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = num(v[i]) / den(v[i]);
  return r;
}

}  // namespace rootlat
