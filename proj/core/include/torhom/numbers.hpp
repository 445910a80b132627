#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace torhom {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rat& r) { return den(r) == 1; }

/// Fractional part in [0, 1).
inline Rat frac_mod1(const Rat& r) {
  Int q = num(r) / den(r);
  Rat f = r - q;
  if (f < 0) f += 1;
  return f;
}

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int binomial(const Int& n, const Int& k);

/// Parses "p/q" or a plain integer string.
Rat parse_rational(const std::string& s);
std::string rational_to_string(const Rat& r);

using RatVec = std::vector<Rat>;

/// Componentwise reduction into [0,1)^n.
RatVec mod1(const RatVec& v);

/// Lexicographic comparison of rational vectors.
bool lex_less(const RatVec& a, const RatVec& b);

/// lcm of denominators.
Int common_denominator(const RatVec& v);

}  // namespace torhom
