#ifndef CMA_SMITH_HPP
#define CMA_SMITH_HPP

#include <algorithm>
#include <vector>

#include "cma/factor.hpp"
#include "cma/matrix.hpp"

namespace cma {

template <class S>
using PolyMatrix = std::vector<std::vector<Poly<S>>>;

template <class S>
PolyMatrix<S> char_matrix(const MatrixX<S>& c, const FieldCtx<S>& ctx) {
  if (c.rows() != c.cols()) throw Error("ShapeMismatch", "xI - c needs a square matrix");
  const int n = static_cast<int>(c.rows());
  PolyMatrix<S> m(n, std::vector<Poly<S>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) m[i][j] = Poly<S>({-c(i, j), ctx.from_int(1)});
      else m[i][j] = Poly<S>::constant(-c(i, j));
    }
  return m;
}

namespace detail {

/// Smith normal form over R[x] by degree-pivot elimination. Destroys `m`;
/// returns the diagonal, monic, in divisibility order d1 | d2 | ...
template <class S>
std::vector<Poly<S>> snf_diagonal(PolyMatrix<S>& m, const FieldCtx<S>& ctx) {
  const int n = static_cast<int>(m.size());
  for (int t = 0; t < n; ++t) {
    for (;;) {
      // pivot: minimal-degree nonzero entry, lowest (row, col) breaks ties
      int pr = -1, pc = -1, best = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j) {
          if (m[i][j].is_zero_poly()) continue;
          if (best < 0 || m[i][j].degree() < best) {
            best = m[i][j].degree();
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) { // submatrix is zero
        pr = pc = t;
        break;
      }
      if (pr != t) std::swap(m[pr], m[t]);
      if (pc != t)
        for (int i = 0; i < n; ++i) std::swap(m[i][pc], m[i][t]);
      // unit row scaling keeps the pivot monic and coefficients tame over Q
      S lead_inv = inv(m[t][t][m[t][t].degree()]);
      for (int j = t; j < n; ++j) m[t][j] = Poly<S>::constant(lead_inv) * m[t][j];
      bool dirty = false;
      for (int i = t + 1; i < n; ++i) {
        if (m[i][t].is_zero_poly()) continue;
        Poly<S> q = m[i][t] / m[t][t];
        for (int j = t; j < n; ++j) m[i][j] = m[i][j] - q * m[t][j];
        if (!m[i][t].is_zero_poly()) dirty = true; // lower-degree remainder stays
      }
      for (int j = t + 1; j < n; ++j) {
        if (m[t][j].is_zero_poly()) continue;
        Poly<S> q = m[t][j] / m[t][t];
        for (int i = t; i < n; ++i) m[i][j] = m[i][j] - q * m[i][t];
        if (!m[t][j].is_zero_poly()) dirty = true;
      }
      if (dirty) continue;
      // pivot clears its row and column; enforce divisibility on the rest
      bool fixed = false;
      for (int i = t + 1; i < n && !fixed; ++i)
        for (int j = t + 1; j < n && !fixed; ++j) {
          if (m[i][j].is_zero_poly()) continue;
          if (!(m[i][j] % m[t][t]).is_zero_poly()) {
            for (int jj = t; jj < n; ++jj) m[t][jj] = m[t][jj] + m[i][jj];
            fixed = true;
          }
        }
      if (!fixed) break;
    }
  }
  std::vector<Poly<S>> diag;
  for (int t = 0; t < n; ++t) diag.push_back(m[t][t].monic());
  (void)ctx;
  return diag;
}

} // namespace detail

/// Nonconstant invariant factors d1 | d2 | ... | dk of xI - c, each monic.
template <class S>
std::vector<Poly<S>> smith_invariant_factors(const MatrixX<S>& c, const FieldCtx<S>& ctx) {
  PolyMatrix<S> m = char_matrix(c, ctx);
  std::vector<Poly<S>> diag = detail::snf_diagonal(m, ctx);
  std::vector<Poly<S>> out;
  for (const auto& d : diag)
    if (d.degree() >= 1) out.push_back(d);
  return out;
}

/// Multiset of elementary divisors grouped by irreducible. Irreducibles are
/// pairwise distinct and canonically sorted; exponents sorted descending with
/// multiplicity.
template <class S>
struct ElementaryDivisorMultiset {
  struct Group {
    Poly<S> irr;            // monic irreducible
    std::vector<int> exps;  // descending, with multiplicity
    int max_exp() const { return exps.front(); }
    std::vector<int> distinct_exps() const { // ascending
      std::vector<int> d(exps.rbegin(), exps.rend());
      d.erase(std::unique(d.begin(), d.end()), d.end());
      return d;
    }
  };
  std::vector<Group> groups;

  void add(const Poly<S>& irr, int exp, int multiplicity = 1) {
    for (auto& g : groups)
      if (g.irr == irr) {
        for (int k = 0; k < multiplicity; ++k) g.exps.push_back(exp);
        return;
      }
    groups.push_back(Group{irr, std::vector<int>(multiplicity, exp)});
  }
  void canonicalize() {
    for (auto& g : groups) std::sort(g.exps.begin(), g.exps.end(), std::greater<int>());
    std::sort(groups.begin(), groups.end(),
              [](const Group& a, const Group& b) { return poly_less(a.irr, b.irr); });
  }
  /// sum of deg(irr) * exp over the multiset; equals the matrix size
  int degree_sum() const {
    int s = 0;
    for (const auto& g : groups)
      for (int e : g.exps) s += g.irr.degree() * e;
    return s;
  }
  /// number of distinct elementary divisors |E_c|
  int num_distinct() const {
    int s = 0;
    for (const auto& g : groups) s += static_cast<int>(g.distinct_exps().size());
    return s;
  }
  Poly<S> characteristic_polynomial(const FieldCtx<S>& ctx) const {
    Poly<S> acc = Poly<S>::one(ctx);
    for (const auto& g : groups)
      for (int e : g.exps) acc = acc * pow(g.irr, static_cast<unsigned long long>(e), ctx);
    return acc;
  }
  Poly<S> minimal_polynomial(const FieldCtx<S>& ctx) const {
    Poly<S> acc = Poly<S>::one(ctx);
    for (const auto& g : groups)
      acc = acc * pow(g.irr, static_cast<unsigned long long>(g.max_exp()), ctx);
    return acc;
  }
  bool operator==(const ElementaryDivisorMultiset& o) const {
    if (groups.size() != o.groups.size()) return false;
    for (size_t i = 0; i < groups.size(); ++i)
      if (groups[i].irr != o.groups[i].irr || groups[i].exps != o.groups[i].exps) return false;
    return true;
  }
};

template <class S>
ElementaryDivisorMultiset<S> elementary_divisors_from_invariant_factors(
    const std::vector<Poly<S>>& invf, const FieldCtx<S>& ctx, std::uint64_t seed = 0) {
  ElementaryDivisorMultiset<S> out;
  for (const auto& d : invf)
    for (const auto& [q, m] : factor(d, ctx, seed).factors) out.add(q, m);
  out.canonicalize();
  return out;
}

template <class S>
ElementaryDivisorMultiset<S> elementary_divisors(const MatrixX<S>& c, const FieldCtx<S>& ctx,
                                                 std::uint64_t seed = 0) {
  auto out = elementary_divisors_from_invariant_factors(smith_invariant_factors(c, ctx), ctx, seed);
  if (out.degree_sum() != c.rows())
    throw Error("Internal", "elementary divisor degree sum does not match the matrix size");
  return out;
}

template <class S>
nlohmann::json eldiv_to_json(const ElementaryDivisorMultiset<S>& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : e.groups) arr.push_back({{"irr", to_display(g.irr)}, {"exps", g.exps}});
  return arr;
}

} // namespace cma

#endif
