#ifndef CMA_POLY_HPP
#define CMA_POLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cma/field.hpp"

namespace cma {

/// Dense univariate polynomial over a field scalar S, coefficients stored
/// low-to-high with no trailing zeros. The zero polynomial is the empty list.
template <class S>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly one(const FieldCtx<S>& ctx) { return Poly({ctx.from_int(1)}); }
  static Poly constant(const S& a) { return Poly(std::vector<S>{a}); }
  static Poly x(const FieldCtx<S>& ctx) { return Poly({ctx.from_int(0), ctx.from_int(1)}); }
  /// x^n - 1
  static Poly xn_minus_one(const FieldCtx<S>& ctx, int n) {
    std::vector<S> c(n + 1, ctx.from_int(0));
    c[0] = ctx.from_int(-1);
    c[n] = ctx.from_int(1);
    return Poly(std::move(c));
  }
  /// (x + shift)^n expanded via repeated multiplication
  static Poly linear(const FieldCtx<S>& ctx, const S& shift) {
    return Poly({shift, ctx.from_int(1)});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  bool is_zero_poly() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == c_[0] * c_[0] && !is_zero(c_[0]); }
  const std::vector<S>& coeffs() const { return c_; }
  const S& operator[](int i) const { return c_[i]; }
  const S& leading() const { return c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
      if (i < a.c_.size() && i < b.c_.size()) r[i] = a.c_[i] + b.c_[i];
      else if (i < a.c_.size()) r[i] = a.c_[i];
      else r[i] = b.c_[i];
    }
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    std::vector<S> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return Poly();
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, a.c_[0] - a.c_[0]);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const S& s, const Poly& a) {
    std::vector<S> r(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
    return Poly(std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly monic() const {
    if (is_zero_poly()) return *this;
    return inv(leading()) * *this;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<S> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mul_by_int(c_[i], static_cast<long long>(i));
    return Poly(std::move(r));
  }

  S eval(const S& at) const {
    if (is_zero_poly()) return at - at;
    S acc = c_.back();
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) acc = acc * at + c_[i];
    return acc;
  }

  /// substitute another polynomial for x (Horner)
  Poly compose(const Poly& g) const {
    Poly acc;
    for (int i = degree(); i >= 0; --i) acc = acc * g + Poly::constant(c_[i]);
    return acc;
  }

  size_t hash_key() const { return c_.size(); }

private:
  static S mul_by_int(const S& a, long long k) {
    // a*k via doubling; works in any characteristic without a ctx
    if (k == 0) return a - a;
    bool neg = k < 0;
    unsigned long long kk = neg ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    S acc = a - a, base = a;
    while (kk) {
      if (kk & 1) acc += base;
      base += base;
      kk >>= 1;
    }
    return neg ? -acc : acc;
  }

  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

template <class S>
std::pair<Poly<S>, Poly<S>> divrem(const Poly<S>& a, const Poly<S>& b) {
  if (b.is_zero_poly()) throw division_by_zero();
  if (a.degree() < b.degree()) return {Poly<S>(), a};
  std::vector<S> rem(a.coeffs());
  const int db = b.degree();
  const S lc_inv = inv(b.leading());
  std::vector<S> q(a.degree() - db + 1, a.leading() - a.leading());
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(rem[i])) continue;
    S f = rem[i] * lc_inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b[j];
  }
  return {Poly<S>(std::move(q)), Poly<S>(std::move(rem))};
}

template <class S>
Poly<S> operator/(const Poly<S>& a, const Poly<S>& b) {
  return divrem(a, b).first;
}
template <class S>
Poly<S> operator%(const Poly<S>& a, const Poly<S>& b) {
  return divrem(a, b).second;
}

/// monic gcd by the Euclidean algorithm
template <class S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  while (!b.is_zero_poly()) {
    Poly<S> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class S>
Poly<S> lcm(const Poly<S>& a, const Poly<S>& b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return Poly<S>();
  return ((a * b) / gcd(a, b)).monic();
}

template <class S>
Poly<S> pow(Poly<S> base, unsigned long long e, const FieldCtx<S>& ctx) {
  Poly<S> r = Poly<S>::one(ctx);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

template <class S>
Poly<S> mulmod(const Poly<S>& a, const Poly<S>& b, const Poly<S>& m) {
  return (a * b) % m;
}

template <class S>
Poly<S> powmod(Poly<S> base, const mpz_class& e, const Poly<S>& m, const FieldCtx<S>& ctx) {
  Poly<S> r = Poly<S>::one(ctx) % m;
  base = base % m;
  const mp_bitcnt_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (mp_bitcnt_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
  }
  if (e == 0) r = Poly<S>::one(ctx) % m;
  return r;
}

/// canonical order: by degree, then coefficients from the top down
template <class S>
bool poly_less(const Poly<S>& a, const Poly<S>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] == b[i]) continue;
    return field_traits<S>::less(a[i], b[i]);
  }
  return false;
}

template <class S>
std::string to_display(const Poly<S>& f) {
  if (f.is_zero_poly()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    if (is_zero(f[i])) continue;
    std::string coeff = field_traits<S>::to_string(f[i]);
    bool neg = !coeff.empty() && coeff[0] == '-';
    std::string mag = neg ? coeff.substr(1) : coeff;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

template <class S>
nlohmann::json poly_to_json(const Poly<S>& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const S& a : f.coeffs()) coeffs.push_back(field_traits<S>::to_json(a));
  return {{"coeffs", coeffs}};
}

template <class S>
Poly<S> poly_from_json(const FieldCtx<S>& ctx, const nlohmann::json& j) {
  std::vector<S> c;
  for (const auto& e : j.at("coeffs")) c.push_back(field_traits<S>::from_json(ctx, e));
  return Poly<S>(std::move(c));
}

} // namespace cma

#endif
