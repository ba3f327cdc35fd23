// rational.hpp — exact rational scalars and coordinate vectors.
//
// All scalar arithmetic in this library is exact: Rat is a GMP rational,
// kept canonical (reduced, positive denominator) by mpq_class itself.
// A Weight is simply a vector of Rat in the standard ambient coordinates
// of a root-system realization.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace gvm {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

// ---- error hierarchy (one base so the CLI can map to exit codes) ----

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};
struct InvalidType : Error { using Error::Error; };
struct RootNotInSubsystem : Error { using Error::Error; };
struct NotIrreducible : Error { using Error::Error; };
struct NotIntegralOnI : Error { using Error::Error; };
struct NotInLambdaIPlus : Error { using Error::Error; };
struct OrbitTooLarge : Error { using Error::Error; };
struct OracleCapExceeded : Error { using Error::Error; };
struct RankTooLargeForOracle : Error { using Error::Error; };
struct RootNotInPsiPlus : Error { using Error::Error; };
struct NotBasic : Error { using Error::Error; };
struct WrongType : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct InternalError : Error { using Error::Error; };

// ---- scalar helpers ----

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline bool is_half_integer(const Rat& r) {  // member of (1/2)Z
  return r.get_den() == 1 || r.get_den() == 2;
}

inline long to_long(const Rat& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw InternalError("to_long: not a small integer: " + r.get_str());
  return r.get_num().get_si();
}

inline int sgn_of(const Rat& r) { return sgn(r); }

// Parse "p", "-p" or "p/q" (decimal literals are rejected to keep
// everything exact).
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
          c == '+' || c == '/'))
      throw ParseError("bad rational literal '" + s + "'");
  try {
    Rat r(s);
    r.canonicalize();
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal '" + s + "'");
  }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// ---- vector helpers ----

inline std::string vec_str(const Vec& v) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += v[k].get_str();
  }
  return out;
}

// Canonical hash/map key for a weight (mpq_class is always reduced).
inline std::string wkey(const Vec& v) { return vec_str(v); }

inline Vec parse_vec(const std::string& s) {
  Vec out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(parse_rational(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(parse_rational(cur));
  return out;
}

inline Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InternalError("dot: dimension mismatch");
  Rat s = 0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline Vec vadd(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

inline Vec vsub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (size_t k = 0; k < a.size(); ++k) out[k] -= b[k];
  return out;
}

inline Vec vscale(const Rat& c, const Vec& a) {
  Vec out(a);
  for (auto& x : out) x *= c;
  return out;
}

inline bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline Vec zero_vec(size_t n) { return Vec(n, Rat(0)); }

// Lexicographic order on coordinates; used for deterministic tie-breaks.
inline bool vec_less(const Vec& a, const Vec& b) {
  for (size_t k = 0; k < a.size() && k < b.size(); ++k) {
    int c = cmp(a[k], b[k]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace gvm
