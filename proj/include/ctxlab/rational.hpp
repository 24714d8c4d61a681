#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>

namespace ctxlab {

// Exact rational scalar used throughout. GMP keeps num/den in canonical
// reduced form (gcd 1, positive denominator) under arithmetic.
using Rational = mpq_class;

inline int sign(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }
inline bool is_zero(const Rational& r) { return sign(r) == 0; }

/// Parses "num/den", integer, or finite decimal ("2/3", "-1", "0.25").
/// Returns nullopt on malformed input.
std::optional<Rational> try_parse_rational(const std::string& text);

/// Parsing front end that throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical "num/den" form, always with an explicit denominator.
std::string fraction_string(const Rational& r);

/// Display form: "num" when the denominator is 1, else "num/den".
std::string display_string(const Rational& r);

// Dense column vector of exact rationals. Distributions over a single
// outcome space are stored densely, indexed by the space's value order.
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Pmf = RationalVector;

inline bool exactly_equal(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

}  // namespace ctxlab

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;

  static inline Real epsilon() { return mpq_class(0); }
  static inline Real dummy_precision() { return mpq_class(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen
