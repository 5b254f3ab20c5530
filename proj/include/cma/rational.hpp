#ifndef CMA_RATIONAL_HPP
#define CMA_RATIONAL_HPP

#include <string>

#include <Eigen/Core>
#include <gmpxx.h>

#include "cma/error.hpp"

namespace cma {

/// Exact rational scalar. mpq_class keeps values canonical (reduced fraction,
/// positive denominator), which is exactly the canonical form the library
/// relies on for equality.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  mpq_class q;
  if (slash == std::string::npos) {
    q = mpq_class(mpz_class(s));
  } else {
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw division_by_zero();
    q = mpq_class(mpz_class(s.substr(0, slash)), den);
  }
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace cma

namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
} // namespace Eigen

#endif
