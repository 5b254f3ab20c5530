#ifndef CMA_FACTOR_HPP
#define CMA_FACTOR_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "cma/poly.hpp"

namespace cma {

/// Complete factorization into monic irreducibles:
/// unit * prod(irr_i ^ mult_i) == input.
template <class S>
struct Factorization {
  S unit;
  std::vector<std::pair<Poly<S>, int>> factors; // (monic irreducible, multiplicity)

  Poly<S> expand(const FieldCtx<S>& ctx) const {
    Poly<S> acc = Poly<S>::constant(unit);
    for (const auto& [q, m] : factors) acc = acc * pow(q, static_cast<unsigned long long>(m), ctx);
    return acc;
  }

  void canonicalize() {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  }
};

namespace detail {

/// p-th root of g(x^p) over F_p: keep every p-th coefficient (a^p = a in F_p).
inline Poly<Fp> pth_root(const Poly<Fp>& f, std::uint32_t p) {
  std::vector<Fp> r;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) r.push_back(f[i]);
  return Poly<Fp>(std::move(r));
}

/// Squarefree decomposition of a monic polynomial; returns coprime squarefree
/// parts with their multiplicities (Musser, with the char-p fallthrough).
template <class S>
void squarefree_decomp(const Poly<S>& f, const FieldCtx<S>& ctx, int outer_mult,
                       std::vector<std::pair<Poly<S>, int>>& out) {
  if (f.degree() <= 0) return;
  const std::uint32_t p = field_traits<S>::characteristic(ctx);
  Poly<S> fprime = f.derivative();
  if (fprime.is_zero_poly()) {
    if constexpr (std::is_same_v<S, Fp>) {
      squarefree_decomp(pth_root(f, p), ctx, outer_mult * static_cast<int>(p), out);
      return;
    } else {
      throw Error("Internal", "zero derivative in characteristic 0");
    }
  }
  Poly<S> c = gcd(f, fprime);
  Poly<S> w = (f / c).monic();
  int i = 1;
  while (!w.is_one()) {
    Poly<S> y = gcd(w, c);
    Poly<S> z = (w / y).monic();
    if (!z.is_one()) out.emplace_back(z, outer_mult * i);
    ++i;
    w = y;
    c = (c / y).monic();
  }
  if (!c.is_one()) {
    if constexpr (std::is_same_v<S, Fp>) {
      squarefree_decomp(pth_root(c, p), ctx, outer_mult * static_cast<int>(p), out);
    } else {
      throw Error("Internal", "unexpected residual factor in characteristic 0");
    }
  }
}

/// Distinct-degree splitting of a monic squarefree polynomial over F_p.
inline std::vector<std::pair<Poly<Fp>, int>> ddf(Poly<Fp> f, const FieldCtx<Fp>& ctx) {
  std::vector<std::pair<Poly<Fp>, int>> out; // (product of irreducibles, degree)
  Poly<Fp> h = Poly<Fp>::x(ctx) % f;
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.emplace_back(f, f.degree());
      break;
    }
    h = powmod(h, mpz_class(ctx.p), f, ctx);
    Poly<Fp> g = gcd(h - Poly<Fp>::x(ctx), f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = (f / g).monic();
      h = h % f;
    }
  }
  return out;
}

inline Poly<Fp> random_poly(int max_deg, const FieldCtx<Fp>& ctx, std::mt19937_64& rng) {
  std::vector<Fp> c(max_deg + 1);
  for (auto& a : c) a = field_traits<Fp>::random(ctx, rng);
  return Poly<Fp>(std::move(c));
}

/// Cantor-Zassenhaus equal-degree splitting; f is a product of distinct
/// irreducibles all of degree d. Char-2 uses the trace map.
inline void edf(const Poly<Fp>& f, int d, const FieldCtx<Fp>& ctx, std::mt19937_64& rng,
                std::vector<Poly<Fp>>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), ctx.p, static_cast<unsigned long>(d));
  while (true) {
    Poly<Fp> r = random_poly(f.degree() - 1, ctx, rng);
    if (r.degree() < 1) continue;
    Poly<Fp> g = gcd(r, f);
    if (g.degree() == 0 || g.degree() == f.degree()) {
      if (ctx.p == 2) {
        Poly<Fp> t = r % f, acc = t;
        for (int i = 1; i < d; ++i) {
          t = mulmod(t, t, f);
          acc = acc + t;
        }
        g = gcd(acc, f);
      } else {
        Poly<Fp> s = powmod(r, (q - 1) / 2, f, ctx) - Poly<Fp>::one(ctx);
        g = gcd(s, f);
      }
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf(g, d, ctx, rng, out);
      edf((f / g).monic(), d, ctx, rng, out);
      return;
    }
  }
}

// ---- rationals -------------------------------------------------------------

inline std::vector<mpz_class> divisors(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  if (n > mpz_class("1000000000000"))
    throw Error("UnsupportedRationalFactorization",
                "coefficients too large for rational-root search");
  std::vector<mpz_class> out;
  for (mpz_class i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
  }
  return out;
}

/// all rational roots of a squarefree polynomial over Q
inline std::vector<Rat> rational_roots(const Poly<Rat>& f) {
  std::vector<Rat> roots;
  if (f.degree() < 1) return roots;
  if (f.eval(Rat(0)) == 0) roots.push_back(Rat(0));
  // scale to a primitive integer polynomial
  mpz_class den_lcm = 1;
  for (const Rat& c : f.coeffs()) {
    mpz_class d = c.get_den();
    mpz_class g = gcd(den_lcm, d);
    den_lcm = den_lcm / g * d;
  }
  std::vector<mpz_class> ic;
  for (const Rat& c : f.coeffs()) {
    Rat scaled = c * Rat(den_lcm);
    ic.push_back(scaled.get_num());
  }
  mpz_class a0 = ic.front(), an = ic.back();
  int i0 = 0;
  while (a0 == 0 && i0 < static_cast<int>(ic.size()) - 1) a0 = ic[++i0]; // skip the x | f part
  for (const mpz_class& num : divisors(a0)) {
    for (const mpz_class& den : divisors(an)) {
      for (int sign : {1, -1}) {
        Rat cand(sign * num, den);
        cand.canonicalize();
        if (f.eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
    }
  }
  return roots;
}

inline bool rat_sqrt(const Rat& z, Rat& out) {
  if (z < 0) return false;
  mpz_class num = z.get_num(), den = z.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  out = Rat(sn, sd);
  out.canonicalize();
  return true;
}

/// Split a monic quartic with no rational roots into two monic rational
/// quadratics via the resolvent cubic of the depressed form, or report it
/// irreducible. Complete for degree 4 over Q.
inline bool quartic_split(const Poly<Rat>& h, const FieldCtx<Rat>& ctx,
                          Poly<Rat>& f1, Poly<Rat>& f2) {
  Rat s = -h[3] / Rat(4);
  Poly<Rat> shifted = h.compose(Poly<Rat>({s, Rat(1)})); // depressed: x^4 + p x^2 + q x + r
  Rat p = shifted[2], q = shifted[1], r = shifted[0];
  // resolvent cubic z^3 + 2p z^2 + (p^2 - 4r) z - q^2
  Poly<Rat> res({-q * q, p * p - Rat(4) * r, Rat(2) * p, Rat(1)});
  for (const Rat& z : rational_roots(res)) {
    Rat u;
    Poly<Rat> g1, g2;
    if (z == 0) {
      if (q != 0) continue;
      Rat disc = p * p - Rat(4) * r, sq;
      if (!rat_sqrt(disc, sq)) continue;
      g1 = Poly<Rat>({(p - sq) / Rat(2), Rat(0), Rat(1)});
      g2 = Poly<Rat>({(p + sq) / Rat(2), Rat(0), Rat(1)});
    } else {
      if (!rat_sqrt(z, u) || u == 0) continue;
      Rat v = (p + z - q / u) / Rat(2);
      Rat w = (p + z + q / u) / Rat(2);
      g1 = Poly<Rat>({v, u, Rat(1)});
      g2 = Poly<Rat>({w, -u, Rat(1)});
    }
    if (g1 * g2 == shifted) {
      Poly<Rat> back = Poly<Rat>({-s, Rat(1)});
      f1 = g1.compose(back);
      f2 = g2.compose(back);
      (void)ctx;
      return true;
    }
  }
  return false;
}

/// factor a monic squarefree polynomial over Q within the supported class
inline std::vector<Poly<Rat>> factor_squarefree_q(Poly<Rat> g, const FieldCtx<Rat>& ctx) {
  std::vector<Poly<Rat>> out;
  for (const Rat& root : rational_roots(g)) {
    out.push_back(Poly<Rat>({-root, Rat(1)}));
    g = (g / out.back()).monic();
  }
  if (g.degree() == 0) return out;
  if (g.degree() <= 3) { // no rational root => irreducible for degrees 2, 3
    out.push_back(g);
    return out;
  }
  if (g.degree() == 4) {
    Poly<Rat> f1, f2;
    if (quartic_split(g, ctx, f1, f2)) {
      out.push_back(f1);
      out.push_back(f2);
    } else {
      out.push_back(g);
    }
    return out;
  }
  throw Error("UnsupportedRationalFactorization",
              "factorization over Q limited to linear factors plus a residual of degree <= 4; "
              "residual has degree " + std::to_string(g.degree()));
}

inline std::vector<Poly<Fp>> factor_squarefree_fp(const Poly<Fp>& g, const FieldCtx<Fp>& ctx,
                                                  std::mt19937_64& rng) {
  std::vector<Poly<Fp>> out;
  for (const auto& [prod, d] : ddf(g, ctx)) edf(prod, d, ctx, rng, out);
  return out;
}

} // namespace detail

template <class S>
Factorization<S> factor(const Poly<S>& f, const FieldCtx<S>& ctx, std::uint64_t seed = 0) {
  if (f.degree() < 1) throw Error("ConstantPolynomial", "factor requires degree >= 1");
  Factorization<S> out;
  out.unit = f.leading();
  std::vector<std::pair<Poly<S>, int>> sqf;
  detail::squarefree_decomp(f.monic(), ctx, 1, sqf);
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 12345);
  for (const auto& [part, mult] : sqf) {
    std::vector<Poly<S>> irrs;
    if constexpr (std::is_same_v<S, Fp>) irrs = detail::factor_squarefree_fp(part, ctx, rng);
    else irrs = detail::factor_squarefree_q(part, ctx);
    for (const auto& q : irrs) out.factors.emplace_back(q, mult);
  }
  out.canonicalize();
  return out;
}

/// true iff every irreducible factor q of f has gcd(q, q') = 1
template <class S>
bool is_separable(const Poly<S>& f, const FieldCtx<S>& ctx, std::uint64_t seed = 0) {
  if (f.degree() < 1) throw Error("ConstantPolynomial", "is_separable requires degree >= 1");
  if (field_traits<S>::characteristic(ctx) == 0) return true; // char 0: every irreducible is separable
  for (const auto& [q, m] : factor(f, ctx, seed).factors) {
    Poly<S> d = q.derivative();
    if (d.is_zero_poly() || gcd(q, d).degree() != 0) return false;
  }
  return true;
}

/// irreducibility of a monic polynomial over F_p: distinct-degree certificate
/// x^(p^d) == x mod q exactly at d = deg q, and at no proper divisor of d.
inline bool is_irreducible_fp(const Poly<Fp>& q, const FieldCtx<Fp>& ctx) {
  int d = q.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  Poly<Fp> h = Poly<Fp>::x(ctx) % q;
  std::vector<Poly<Fp>> frob(d + 1);
  frob[0] = h;
  for (int i = 1; i <= d; ++i) frob[i] = powmod(frob[i - 1], mpz_class(ctx.p), q, ctx);
  if (frob[d] != Poly<Fp>::x(ctx) % q) return false;
  for (int e = 1; e < d; ++e)
    if (d % e == 0 && gcd(frob[e] - Poly<Fp>::x(ctx), q).degree() > 0) return false;
  return true;
}

} // namespace cma

#endif
