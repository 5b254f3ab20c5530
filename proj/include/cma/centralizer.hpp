#ifndef CMA_CENTRALIZER_HPP
#define CMA_CENTRALIZER_HPP

#include <sstream>
#include <string>
#include <vector>

#include "cma/sequiv.hpp"

namespace cma {

/// One block of the commutant End_{R[c]}(R^n), attached to an irreducible
/// factor f of the minimal polynomial.
template <class S>
struct BlockReport {
  Poly<S> irr;
  int n_i = 0;                  // exponent of irr in the minimal polynomial
  std::vector<int> exps;        // exponents among elementary divisors, descending
  PowerIndexSet distinct_exps;  // ascending, no repeats
  long long dim_block = 0;      // deg(irr) * sum over pairs of min(a, b)
  bool is_semisimple = false;   // n_i = 1
  bool has_nodes = false;       // n_i = 2
};

template <class S>
struct CentralizerReport {
  int n = 0;
  FieldSpec field;
  std::vector<BlockReport<S>> blocks;
  long long total_dim = 0;
  int num_simples = 0;          // distinct elementary divisors
  int num_nonproj_simples = 0;  // distinct exponents within non-semisimple blocks
};

template <class S>
CentralizerReport<S> decompose_from_eldiv(const ElementaryDivisorMultiset<S>& e,
                                          const FieldCtx<S>& ctx) {
  CentralizerReport<S> rep;
  rep.field = ctx.spec();
  rep.n = e.degree_sum();
  rep.num_simples = e.num_distinct();
  for (const auto& g : e.groups) {
    BlockReport<S> b;
    b.irr = g.irr;
    b.exps = g.exps;
    b.distinct_exps = g.distinct_exps();
    b.n_i = g.max_exp();
    b.is_semisimple = b.n_i == 1;
    b.has_nodes = b.n_i == 2;
    long long pairs = 0;
    for (int a : g.exps)
      for (int c : g.exps) pairs += std::min(a, c);
    b.dim_block = static_cast<long long>(g.irr.degree()) * pairs;
    rep.total_dim += b.dim_block;
    if (b.n_i >= 2) rep.num_nonproj_simples += static_cast<int>(b.distinct_exps.size());
    rep.blocks.push_back(std::move(b));
  }
  return rep;
}

template <class S>
CentralizerReport<S> decompose(const MatrixX<S>& c, const FieldCtx<S>& ctx,
                               std::uint64_t seed = 0) {
  return decompose_from_eldiv(elementary_divisors(c, ctx, seed), ctx);
}

template <class S>
int count_nonprojective_simples(const CentralizerReport<S>& rep) {
  return rep.num_nonproj_simples;
}

/// Dimension of {a : ca = ac} as the kernel of the n^2 x n^2 commutation map.
template <class S>
int brute_force_centralizer_dim(const MatrixX<S>& c, const FieldCtx<S>& ctx, int cap = 12) {
  if (c.rows() != c.cols()) throw Error("ShapeMismatch", "commutant needs a square matrix");
  const int n = static_cast<int>(c.rows());
  if (n > cap)
    throw Error("SizeCapExceeded", "matrix size " + std::to_string(n) +
                                       " exceeds the brute-force cap " + std::to_string(cap));
  const int nn = n * n;
  MatrixX<S> m(nn, nn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          S v = ctx.from_int(0);
          if (j == l) v += c(i, k);
          if (i == k) v -= c(l, j);
          m(i * n + j, k * n + l) = v;
        }
  return nn - rank<S>(m);
}

template <class S>
nlohmann::json report_to_json(const CentralizerReport<S>& rep) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : rep.blocks)
    blocks.push_back({{"irr", to_display(b.irr)},
                      {"n", b.n_i},
                      {"exps", b.exps},
                      {"distinct_exps", b.distinct_exps},
                      {"dim_block", b.dim_block},
                      {"is_semisimple", b.is_semisimple},
                      {"has_nodes", b.has_nodes},
                      {"frobenius_class", {{"irr", to_display(b.irr)}, {"n", b.n_i}}}});
  return {{"n", rep.n},
          {"field", rep.field.to_json()},
          {"blocks", blocks},
          {"total_dim", rep.total_dim},
          {"num_simples", rep.num_simples},
          {"num_nonproj_simples", rep.num_nonproj_simples}};
}

template <class S>
std::string report_to_table(const CentralizerReport<S>& rep) {
  std::ostringstream os;
  os << "commutant of an " << rep.n << "x" << rep.n << " matrix, total dim " << rep.total_dim
     << ", simples " << rep.num_simples << " (non-projective " << rep.num_nonproj_simples
     << ")\n";
  for (const auto& b : rep.blocks) {
    os << "  block " << to_display(b.irr) << "  n=" << b.n_i << "  exps=";
    for (size_t i = 0; i < b.exps.size(); ++i) os << (i ? "," : "") << b.exps[i];
    os << "  dim=" << b.dim_block;
    if (b.is_semisimple) os << "  [semisimple]";
    if (b.has_nodes) os << "  [nodes]";
    os << "\n";
  }
  return os.str();
}

} // namespace cma

#endif
