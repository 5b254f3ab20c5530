#ifndef CMA_FP_HPP
#define CMA_FP_HPP

#include <cstdint>
#include <ostream>

#include <Eigen/Core>

#include "cma/error.hpp"

namespace cma {

/// Element of a prime field F_p, stored as the canonical residue in [0, p).
///
/// The modulus travels with the value so matrices and polynomials over
/// different primes cannot be mixed silently. An element with p == 0 is an
/// unbound integer literal (as produced by Scalar(0) inside generic Eigen
/// kernels); it adopts the modulus of the first bound operand it meets.
/// p < 2^31 keeps products of residues inside 64 bits before reduction.
class Fp {
public:
  Fp() = default;
  Fp(long long v) : v_(static_cast<std::uint64_t>(v)), p_(0) {} // NOLINT: implicit by design
  Fp(std::uint32_t p, long long v) : p_(p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint64_t>(r);
  }

  std::uint64_t residue() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }

  bool is_zero() const { return bound() ? v_ == 0 : static_cast<long long>(v_) == 0; }

  friend Fp operator+(Fp a, Fp b) {
    promote(a, b);
    if (!a.bound()) return Fp(static_cast<long long>(a.v_) + static_cast<long long>(b.v_));
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return make(a.p_, s);
  }
  friend Fp operator-(Fp a, Fp b) {
    promote(a, b);
    if (!a.bound()) return Fp(static_cast<long long>(a.v_) - static_cast<long long>(b.v_));
    std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
    return make(a.p_, s);
  }
  friend Fp operator*(Fp a, Fp b) {
    promote(a, b);
    if (!a.bound()) return Fp(static_cast<long long>(a.v_) * static_cast<long long>(b.v_));
    return make(a.p_, (a.v_ * b.v_) % a.p_);
  }
  Fp operator-() const {
    if (!bound()) return Fp(-static_cast<long long>(v_));
    return make(p_, v_ == 0 ? 0 : p_ - v_);
  }
  Fp inv() const {
    if (!bound() || is_zero()) throw division_by_zero();
    // extended Euclid on (v, p)
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p_), newr = static_cast<long long>(v_);
    while (newr != 0) {
      long long q = r / newr;
      long long tmp = t - q * newt; t = newt; newt = tmp;
      tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (t < 0) t += p_;
    return make(p_, static_cast<std::uint64_t>(t));
  }
  friend Fp operator/(Fp a, const Fp& b) {
    Fp bi = b; promote(a, bi);
    return a * bi.inv();
  }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  Fp pow(std::uint64_t e) const {
    Fp r = bound() ? Fp(p_, 1) : Fp(1);
    Fp b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(Fp a, Fp b) {
    promote(a, b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
  friend bool operator<(Fp a, Fp b) {
    promote(a, b);
    return a.v_ < b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << static_cast<long long>(a.v_); }

private:
  static Fp make(std::uint32_t p, std::uint64_t v) {
    Fp r;
    r.p_ = p;
    r.v_ = v;
    return r;
  }
  // Bind unbound literals to the other operand's modulus; reject mixed moduli.
  static void promote(Fp& a, Fp& b) {
    if (a.p_ == b.p_) return;
    if (a.p_ == 0) a = Fp(b.p_, static_cast<long long>(a.v_));
    else if (b.p_ == 0) b = Fp(a.p_, static_cast<long long>(b.v_));
    else throw field_mismatch();
  }

  std::uint64_t v_ = 0;
  std::uint32_t p_ = 0;
};

} // namespace cma

namespace Eigen {
template <>
struct NumTraits<cma::Fp> : GenericNumTraits<cma::Fp> {
  typedef cma::Fp Real;
  typedef cma::Fp NonInteger;
  typedef cma::Fp Nested;
  static inline Real epsilon() { return cma::Fp(0); }
  static inline Real dummy_precision() { return cma::Fp(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 4
  };
};
} // namespace Eigen

#endif
