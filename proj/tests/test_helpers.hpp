#ifndef CMA_TEST_HELPERS_HPP
#define CMA_TEST_HELPERS_HPP

#include <random>

#include "cma/matrix.hpp"

namespace cma::testing {

template <class S>
Poly<S> random_poly(const FieldCtx<S>& ctx, int max_deg, std::mt19937_64& rng) {
  int d = static_cast<int>(rng() % (max_deg + 1));
  std::vector<S> c(d + 1);
  for (auto& a : c) a = field_traits<S>::random(ctx, rng);
  return Poly<S>(std::move(c));
}

template <class S>
Poly<S> random_monic(const FieldCtx<S>& ctx, int deg, std::mt19937_64& rng) {
  std::vector<S> c(deg + 1);
  for (auto& a : c) a = field_traits<S>::random(ctx, rng);
  c.back() = ctx.from_int(1);
  return Poly<S>(std::move(c));
}

template <class S>
MatrixX<S> random_matrix(const FieldCtx<S>& ctx, int n, std::mt19937_64& rng) {
  MatrixX<S> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = field_traits<S>::random(ctx, rng);
  return m;
}

template <class S>
MatrixX<S> random_invertible(const FieldCtx<S>& ctx, int n, std::mt19937_64& rng) {
  for (;;) {
    MatrixX<S> m = random_matrix<S>(ctx, n, rng);
    if (rank<S>(m) == n) return m;
  }
}

/// block-diagonal of Jordan blocks J_size(eigenvalue)
template <class S>
MatrixX<S> jordan(const FieldCtx<S>& ctx, const std::vector<std::pair<int, long long>>& blocks) {
  int n = 0;
  for (const auto& [sz, ev] : blocks) n += sz;
  MatrixX<S> m = identity<S>(n, ctx);
  int off = 0;
  for (const auto& [sz, ev] : blocks) {
    for (int i = 0; i < sz; ++i) {
      m(off + i, off + i) = ctx.from_int(ev);
      if (i + 1 < sz) m(off + i, off + i + 1) = ctx.from_int(1);
    }
    off += sz;
  }
  return m;
}

} // namespace cma::testing

#endif
