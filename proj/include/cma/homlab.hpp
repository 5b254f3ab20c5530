#ifndef CMA_HOMLAB_HPP
#define CMA_HOMLAB_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cma/matrix.hpp"

namespace cma {

/// U = K[x]/(x^n) with K = F_{p^u}. All homological data below (Hom bases,
/// structure constants, Cartan numbers) is expressed in K-dimensions; the
/// structure constants themselves are 0/1, so the computations run over the
/// prime field and u stays descriptive.
struct NakayamaData {
  std::uint32_t p = 2;
  int u = 1; // residue degree
  int n = 1; // Loewy length

  NakayamaData() = default;
  NakayamaData(std::uint32_t p_, int u_, int n_) : p(p_), u(u_), n(n_) {
    if (!is_prime_u32(p)) throw Error("InvalidField", "characteristic must be prime");
    if (u < 1 || n < 1) throw Error("InvalidBlockData", "residue degree and Loewy length >= 1");
  }
};

/// M = direct sum of M(e) = K[x]/(x^e) over e in exps; a generator (n in exps).
struct GeneratorModule {
  int n = 1;
  std::vector<int> exps; // ascending distinct

  GeneratorModule() = default;
  GeneratorModule(int n_, std::vector<int> e) : n(n_), exps(std::move(e)) {
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    if (exps.empty() || exps.front() < 1 || exps.back() > n)
      throw Error("InvalidBlockData", "exponents must lie in 1..n");
    if (exps.back() != n)
      throw Error("MissingTopExponent", "the generator must contain the top exponent n");
  }
};

/// Basis label for Hom(M(a), M(b)): the map sending 1 to x^t,
/// with t in [max(0, b-a), b-1].
struct HomLabel {
  int a = 0, b = 0, t = 0;
  bool operator<(const HomLabel& o) const {
    return std::tie(a, b, t) < std::tie(o.a, o.b, o.t);
  }
  bool operator==(const HomLabel& o) const { return a == o.a && b == o.b && t == o.t; }
};

/// End_U(M) with the composition basis above. Elements are coefficient
/// vectors over F_p; multiplication composes left-to-right
/// (h(a,b,t) * h(b,c,s) = h(a,c,t+s) when t+s < c, else 0).
class StructureConstantAlgebra {
 public:
  NakayamaData base;
  GeneratorModule gen;
  std::vector<HomLabel> basis;

  StructureConstantAlgebra(const NakayamaData& u, const GeneratorModule& m) : base(u), gen(m) {
    if (m.n != u.n) throw Error("InvalidBlockData", "generator and algebra disagree on n");
    for (int a : gen.exps)
      for (int b : gen.exps)
        for (int t = std::max(0, b - a); t <= b - 1; ++t) basis.push_back({a, b, t});
    for (size_t i = 0; i < basis.size(); ++i) index_[basis[i]] = static_cast<int>(i);
    table_.assign(basis.size() * basis.size(), -1);
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < basis.size(); ++j) {
        const HomLabel &f = basis[i], &g = basis[j];
        if (f.b != g.a) continue;
        if (f.t + g.t < g.b) table_[i * basis.size() + j] = index_.at({f.a, g.b, f.t + g.t});
      }
  }

  int dim() const { return static_cast<int>(basis.size()); }
  int index_of(const HomLabel& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw Error("OutOfRange", "no such basis element");
    return it->second;
  }
  /// index of basis_i * basis_j, or -1 when the product is zero
  int mul_index(int i, int j) const { return table_[static_cast<size_t>(i) * basis.size() + j]; }

  FieldCtx<Fp> ctx() const { return field_traits<Fp>::ctx(FieldSpec::prime(base.p)); }

  VectorX<Fp> zero_element() const {
    VectorX<Fp> v(dim());
    for (int i = 0; i < dim(); ++i) v(i) = ctx().from_int(0);
    return v;
  }
  VectorX<Fp> basis_element(int i) const {
    VectorX<Fp> v = zero_element();
    v(i) = ctx().from_int(1);
    return v;
  }
  VectorX<Fp> one_element() const {
    VectorX<Fp> v = zero_element();
    for (int e : gen.exps) v(index_of({e, e, 0})) = ctx().from_int(1);
    return v;
  }
  VectorX<Fp> multiply(const VectorX<Fp>& x, const VectorX<Fp>& y) const {
    VectorX<Fp> out = zero_element();
    for (int i = 0; i < dim(); ++i) {
      if (x(i).is_zero()) continue;
      for (int j = 0; j < dim(); ++j) {
        if (y(j).is_zero()) continue;
        int k = mul_index(i, j);
        if (k >= 0) out(k) += x(i) * y(j);
      }
    }
    return out;
  }

  bool associative_on_all_triples() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        int ij = mul_index(i, j);
        for (int k = 0; k < dim(); ++k) {
          int jk = mul_index(j, k);
          int left = ij < 0 ? -1 : mul_index(ij, k);
          int right = jk < 0 ? -1 : mul_index(i, jk);
          if (left != right) return false;
        }
      }
    return true;
  }

  /// indices of the radical basis: all non-isomorphism components
  std::vector<int> radical_indices() const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
      if (basis[i].a != basis[i].b || basis[i].t > 0) out.push_back(i);
    return out;
  }

  /// h(a,b,t) -> h(b,a,t+a-b): the algebra anti-automorphism fixing idempotents
  HomLabel transpose_label(const HomLabel& l) const { return {l.b, l.a, l.t + l.a - l.b}; }
  bool anti_automorphism_valid() const {
    for (int i = 0; i < dim(); ++i) {
      HomLabel ti = transpose_label(basis[i]);
      if (index_.find(ti) == index_.end()) return false;
      if (basis[i].a == basis[i].b && basis[i].t == 0 && !(ti == basis[i])) return false;
    }
    // phi(x*y) = phi(y)*phi(x) on all basis pairs
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < dim(); ++j) {
        int ij = mul_index(i, j);
        int ji = mul_index(index_of(transpose_label(basis[j])), index_of(transpose_label(basis[i])));
        if (ij < 0) {
          if (ji >= 0) return false;
        } else {
          if (ji < 0 || !(basis[ji] == transpose_label(basis[ij]))) return false;
        }
      }
    return true;
  }

 private:
  std::map<HomLabel, int> index_;
  std::vector<int> table_;
};

inline StructureConstantAlgebra realize_block(const NakayamaData& u, const GeneratorModule& m) {
  StructureConstantAlgebra alg(u, m);
  // defensive checks: associativity, stated dimension, idempotent decomposition
  long long expect = 0;
  for (int a : m.exps)
    for (int b : m.exps) expect += std::min(a, b);
  if (alg.dim() != expect) throw Error("Internal", "basis dimension mismatch");
  if (!alg.associative_on_all_triples()) throw Error("Internal", "multiplication is not associative");
  VectorX<Fp> one = alg.one_element();
  for (int i = 0; i < alg.dim(); ++i) {
    VectorX<Fp> b = alg.basis_element(i);
    if (alg.multiply(one, b) != b || alg.multiply(b, one) != b)
      throw Error("Internal", "idempotents do not sum to the identity");
  }
  return alg;
}

/// Right module over the algebra: row vectors, v -> v * act[z].
struct LambdaModule {
  int dim = 0;
  std::vector<MatrixX<Fp>> act; // one matrix per algebra basis element

  bool valid(const StructureConstantAlgebra& alg) const {
    auto ctx = alg.ctx();
    MatrixX<Fp> zero(dim, dim), id = identity<Fp>(dim, ctx);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) zero(i, j) = ctx.from_int(0);
    MatrixX<Fp> one = zero;
    for (int e : alg.gen.exps) one += act[alg.index_of({e, e, 0})];
    if (dim > 0 && one != id) return false;
    for (int i = 0; i < alg.dim(); ++i)
      for (int j = 0; j < alg.dim(); ++j) {
        int k = alg.mul_index(i, j);
        MatrixX<Fp> prod = act[i] * act[j];
        if (prod != (k < 0 ? zero : act[k])) return false;
      }
    return true;
  }
};

namespace detail {

/// row-space basis in reduced echelon form, with coordinate extraction
struct RowSpace {
  MatrixX<Fp> rows; // r x d, rref
  std::vector<int> pivots;

  static RowSpace from_rows(MatrixX<Fp> m) {
    RowSpace s;
    s.pivots = rref_inplace(m);
    s.rows = m.topRows(static_cast<int>(s.pivots.size()));
    return s;
  }
  int dim() const { return static_cast<int>(pivots.size()); }
  bool contains(VectorX<Fp> v) const {
    for (int r = 0; r < dim(); ++r) {
      Fp c = v(pivots[r]);
      if (c.is_zero()) continue;
      for (int j = 0; j < v.size(); ++j) v(j) -= c * rows(r, j);
    }
    for (int j = 0; j < v.size(); ++j)
      if (!v(j).is_zero()) return false;
    return true;
  }
  /// coordinates of v in the rref basis; throws if v is outside the span
  VectorX<Fp> coords(VectorX<Fp> v, const FieldCtx<Fp>& ctx) const {
    VectorX<Fp> c(dim());
    for (int r = 0; r < dim(); ++r) {
      c(r) = v(pivots[r]);
      if (c(r).is_zero()) continue;
      for (int j = 0; j < v.size(); ++j) v(j) -= c(r) * rows(r, j);
    }
    for (int j = 0; j < v.size(); ++j)
      if (!v(j).is_zero()) throw Error("Internal", "vector outside the subspace");
    return c;
  }
};

/// span of { v * act[r] : v row of basis, r in radical } -- the module radical X*rad
inline RowSpace radical_subspace(const LambdaModule& x, const StructureConstantAlgebra& alg,
                                 const RowSpace& xspan) {
  auto ctx = alg.ctx();
  std::vector<int> rad = alg.radical_indices();
  MatrixX<Fp> gen(xspan.dim() * static_cast<int>(rad.size()), x.dim);
  int row = 0;
  for (int r = 0; r < xspan.dim(); ++r)
    for (int z : rad) {
      gen.row(row++) = xspan.rows.row(r) * x.act[z];
    }
  if (row == 0) {
    MatrixX<Fp> empty(0, x.dim);
    return RowSpace::from_rows(empty);
  }
  return RowSpace::from_rows(gen);
}

} // namespace detail

/// full space of a module as a RowSpace (the identity basis)
inline detail::RowSpace module_space(const LambdaModule& x, const StructureConstantAlgebra& alg) {
  return detail::RowSpace::from_rows(identity<Fp>(x.dim, alg.ctx()));
}

/// indecomposable projective P(a) = e_a * Lambda, basis {h(a,b,t)}
inline LambdaModule projective_module(const StructureConstantAlgebra& alg, int a) {
  auto ctx = alg.ctx();
  std::vector<int> labels;
  for (int i = 0; i < alg.dim(); ++i)
    if (alg.basis[i].a == a) labels.push_back(i);
  LambdaModule m;
  m.dim = static_cast<int>(labels.size());
  std::map<int, int> pos;
  for (size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i);
  for (int z = 0; z < alg.dim(); ++z) {
    MatrixX<Fp> a_z(m.dim, m.dim);
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j) a_z(i, j) = ctx.from_int(0);
    for (size_t i = 0; i < labels.size(); ++i) {
      int k = alg.mul_index(labels[i], z);
      if (k >= 0) a_z(static_cast<int>(i), pos.at(k)) = ctx.from_int(1);
    }
    m.act.push_back(std::move(a_z));
  }
  return m;
}

/// simple module S(a): the top of P(a)
inline LambdaModule simple_module(const StructureConstantAlgebra& alg, int a) {
  auto ctx = alg.ctx();
  LambdaModule m;
  m.dim = 1;
  for (int z = 0; z < alg.dim(); ++z) {
    MatrixX<Fp> a_z(1, 1);
    const HomLabel& l = alg.basis[z];
    a_z(0, 0) = ctx.from_int(l.a == a && l.b == a && l.t == 0 ? 1 : 0);
    m.act.push_back(std::move(a_z));
  }
  return m;
}

inline LambdaModule direct_sum(const std::vector<LambdaModule>& parts,
                               const StructureConstantAlgebra& alg) {
  auto ctx = alg.ctx();
  LambdaModule m;
  for (const auto& p : parts) m.dim += p.dim;
  for (int z = 0; z < alg.dim(); ++z) {
    MatrixX<Fp> a_z(m.dim, m.dim);
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j) a_z(i, j) = ctx.from_int(0);
    int off = 0;
    for (const auto& p : parts) {
      a_z.block(off, off, p.dim, p.dim) = p.act[z];
      off += p.dim;
    }
    m.act.push_back(std::move(a_z));
  }
  return m;
}

/// multiplicity of S(e) in the top X / X*rad, per idempotent e
inline std::map<int, int> top_multiplicities(const LambdaModule& x,
                                             const StructureConstantAlgebra& alg) {
  auto full = module_space(x, alg);
  auto rad = detail::radical_subspace(x, alg, full);
  std::map<int, int> mult;
  for (int e : alg.gen.exps) {
    // dim (X e + X rad) - dim (X rad)
    MatrixX<Fp> gen(rad.dim() + x.dim, x.dim);
    gen.topRows(rad.dim()) = rad.rows;
    gen.bottomRows(x.dim) = x.act[alg.index_of({e, e, 0})];
    mult[e] = detail::RowSpace::from_rows(gen).dim() - rad.dim();
  }
  return mult;
}

/// projective cover P -> X together with the syzygy ker(P -> X)
struct CoverData {
  LambdaModule cover;
  LambdaModule syzygy;
  std::map<int, int> top; // multiplicities per idempotent
};

inline CoverData projective_cover(const LambdaModule& x, const StructureConstantAlgebra& alg) {
  auto ctx = alg.ctx();
  auto full = module_space(x, alg);
  auto rad = detail::radical_subspace(x, alg, full);
  CoverData out;
  out.top = top_multiplicities(x, alg);

  // pick lifts: vectors of X e_a spanning the top's e_a-component mod X rad
  std::vector<LambdaModule> parts;
  std::vector<VectorX<Fp>> lifts;  // one per part
  std::vector<int> part_idem;
  MatrixX<Fp> picked(rad.dim() + x.dim, x.dim);
  picked.topRows(rad.dim()) = rad.rows;
  int picked_rows = rad.dim();
  for (int e : alg.gen.exps) {
    MatrixX<Fp> img = x.act[alg.index_of({e, e, 0})]; // rows span X e
    for (int r = 0; r < img.rows(); ++r) {
      auto span = detail::RowSpace::from_rows(picked.topRows(picked_rows));
      if (span.contains(img.row(r).transpose())) continue;
      picked.row(picked_rows++) = img.row(r);
      parts.push_back(projective_module(alg, e));
      lifts.push_back(img.row(r).transpose());
      part_idem.push_back(e);
    }
  }
  out.cover = direct_sum(parts, alg);

  // the cover map as a matrix on row vectors: basis element h(a,b,t) of the
  // e_a-copy goes to lift * act[h(a,b,t)]
  MatrixX<Fp> pi(out.cover.dim, x.dim);
  int off = 0;
  for (size_t pi_idx = 0; pi_idx < parts.size(); ++pi_idx) {
    int e = part_idem[pi_idx];
    for (int z = 0; z < alg.dim(); ++z) {
      if (alg.basis[z].a != e) continue;
      pi.row(off++) = (lifts[pi_idx].transpose() * x.act[z]);
    }
  }
  if (rank<Fp>(pi) != x.dim) throw Error("Internal", "projective cover map is not surjective");

  // syzygy = left kernel of pi, with the restricted action
  std::vector<VectorX<Fp>> kb = kernel_basis<Fp>(pi.transpose(), ctx);
  MatrixX<Fp> krows(static_cast<int>(kb.size()), out.cover.dim);
  for (size_t i = 0; i < kb.size(); ++i) krows.row(static_cast<int>(i)) = kb[i].transpose();
  auto kspace = detail::RowSpace::from_rows(krows);
  LambdaModule syz;
  syz.dim = kspace.dim();
  for (int z = 0; z < alg.dim(); ++z) {
    MatrixX<Fp> a_z(syz.dim, syz.dim);
    for (int r = 0; r < syz.dim; ++r) {
      VectorX<Fp> img = (kspace.rows.row(r) * out.cover.act[z]).transpose();
      a_z.row(r) = kspace.coords(img, ctx).transpose();
    }
    syz.act.push_back(std::move(a_z));
  }
  out.syzygy = std::move(syz);
  return out;
}

/// dimension fingerprint used by the isomorphism test: total dimension,
/// per-idempotent dimensions, and the radical series dimensions
inline std::vector<int> module_fingerprint(const LambdaModule& x,
                                           const StructureConstantAlgebra& alg) {
  std::vector<int> f{x.dim};
  for (int e : alg.gen.exps) f.push_back(rank<Fp>(x.act[alg.index_of({e, e, 0})]));
  auto layer = module_space(x, alg);
  while (layer.dim() > 0) {
    auto next = detail::radical_subspace(x, alg, layer);
    f.push_back(next.dim());
    if (next.dim() == layer.dim()) break; // radical not nilpotent on this chain (defensive)
    layer = next;
  }
  return f;
}

enum class IsoResult { Isomorphic, NotIsomorphic, Unknown };

/// Sound isomorphism test: fingerprints, then a search for an invertible
/// element of the Hom space (basis vectors first, then up to 64 seeded random
/// combinations). Never guesses: inconclusive searches return Unknown.
inline IsoResult modules_isomorphic(const LambdaModule& x, const LambdaModule& y,
                                    const StructureConstantAlgebra& alg, std::uint64_t seed = 0) {
  if (module_fingerprint(x, alg) != module_fingerprint(y, alg)) return IsoResult::NotIsomorphic;
  if (x.dim == 0) return IsoResult::Isomorphic;
  auto ctx = alg.ctx();
  const int d = x.dim;
  // solve act_x[z] H = H act_y[z] for H (d x d), flattened as h(i*d+j)
  MatrixX<Fp> sys(alg.dim() * d * d, d * d);
  for (int r = 0; r < sys.rows(); ++r)
    for (int c = 0; c < sys.cols(); ++c) sys(r, c) = ctx.from_int(0);
  int row = 0;
  for (int z = 0; z < alg.dim(); ++z) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          sys(row, k * d + j) += x.act[z](i, k);
          sys(row, i * d + k) -= y.act[z](k, j);
        }
        ++row;
      }
  }
  std::vector<VectorX<Fp>> hom = kernel_basis<Fp>(sys, ctx);
  auto invertible = [&](const VectorX<Fp>& h) {
    MatrixX<Fp> m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m(i, j) = h(i * d + j);
    return rank<Fp>(m) == d;
  };
  for (const auto& h : hom)
    if (invertible(h)) return IsoResult::Isomorphic;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 77);
  for (int trial = 0; trial < 64 && !hom.empty(); ++trial) {
    VectorX<Fp> h(d * d);
    for (int i = 0; i < d * d; ++i) h(i) = ctx.from_int(0);
    for (const auto& b : hom) {
      Fp c = field_traits<Fp>::random(ctx, rng);
      for (int i = 0; i < d * d; ++i) h(i) += c * b(i);
    }
    if (invertible(h)) return IsoResult::Isomorphic;
  }
  return IsoResult::Unknown;
}

struct GlDim {
  enum class Kind { Finite, DetectedInfinite, ExceededCap } kind = Kind::Finite;
  int value = 0; // dimension for Finite, cap for ExceededCap
  bool operator==(const GlDim& o) const { return kind == o.kind && value == o.value; }
};
struct DomDim {
  bool infinite = false;
  int value = 0;
  bool operator==(const DomDim& o) const { return infinite == o.infinite && value == o.value; }
};

struct ResolutionTrace {
  GlDim pd;                      // Finite(d) = projective dimension
  std::vector<int> syzygy_dims;  // dims of the successive syzygies
};

/// minimal projective resolution by repeated covers; DetectedInfinite when a
/// syzygy repeats up to isomorphism
inline ResolutionTrace min_projective_resolution(const StructureConstantAlgebra& alg,
                                                 const LambdaModule& x, int cap = 64,
                                                 std::uint64_t seed = 0) {
  if (cap < 1) throw Error("InvalidArgument", "resolution cap must be >= 1");
  ResolutionTrace tr;
  LambdaModule cur = x;
  std::vector<LambdaModule> history;
  for (int step = 0; step <= cap; ++step) {
    if (cur.dim == 0) {
      tr.pd.kind = GlDim::Kind::Finite;
      tr.pd.value = step == 0 ? 0 : step - 1;
      return tr;
    }
    if (step == cap) break;
    LambdaModule syz = projective_cover(cur, alg).syzygy;
    for (const auto& old : history)
      if (modules_isomorphic(old, syz, alg, seed) == IsoResult::Isomorphic) {
        tr.syzygy_dims.push_back(syz.dim);
        tr.pd.kind = GlDim::Kind::DetectedInfinite;
        return tr;
      }
    tr.syzygy_dims.push_back(syz.dim);
    history.push_back(syz);
    cur = std::move(syz);
  }
  tr.pd.kind = GlDim::Kind::ExceededCap;
  tr.pd.value = cap;
  return tr;
}

/// syzygy of M(e) over K[x]/(x^n) is M(n-e)
inline int syzygy_exponent(int e, int n) {
  if (e < 1 || e > n) throw Error("OutOfRange", "exponent must lie in 1..n");
  if (e == n) throw Error("ProjectiveInput", "M(n) is projective and has zero syzygy");
  return n - e;
}

/// K-dimension of Ext^i_U(M(a), M(b)) via the 2-periodic resolution
/// ... -> U --x^{n-a}--> U --x^a--> U -> M(a) -> 0, using explicit
/// multiplication matrices on M(b).
inline int ext_dim(int a, int b, int i, const NakayamaData& u) {
  if (a < 1 || a > u.n || b < 1 || b > u.n || i < 1)
    throw Error("OutOfRange", "ext_dim needs 1 <= a,b <= n and i >= 1");
  if (a == u.n) return 0; // M(n) = U is projective
  auto ctx = field_traits<Fp>::ctx(FieldSpec::prime(u.p));
  auto mult_x = [&](int m) { // multiplication by x^m on M(b) = K[x]/(x^b)
    MatrixX<Fp> mat(b, b);
    for (int r = 0; r < b; ++r)
      for (int c = 0; c < b; ++c) mat(r, c) = ctx.from_int(r + m == c ? 1 : 0);
    return mat;
  };
  MatrixX<Fp> din = (i % 2 == 1) ? mult_x(a) : mult_x(u.n - a);        // d_i^*
  MatrixX<Fp> dout = (i % 2 == 1) ? mult_x(u.n - a) : mult_x(a);      // d_{i+1}^*
  int ker = b - rank<Fp>(dout);
  int img = rank<Fp>(din);
  return ker - img;
}

/// dom dim = 1 + least i with Ext^i(M, M) != 0; Infinite iff M is projective
inline DomDim dominant_dimension(const NakayamaData& u, const GeneratorModule& m) {
  if (m.exps.size() == 1 && m.exps[0] == u.n) return DomDim{true, 0};
  for (int i = 1; i <= 2 * u.n + 2; ++i)
    for (int a : m.exps)
      for (int b : m.exps)
        if (ext_dim(a, b, i, u) != 0) return DomDim{false, i + 1};
  throw Error("Internal", "no nonvanishing Ext found for a non-projective generator");
}

inline GlDim global_dimension(const StructureConstantAlgebra& alg, int cap = 64,
                              std::uint64_t seed = 0) {
  GlDim out;
  for (int e : alg.gen.exps) {
    ResolutionTrace tr = min_projective_resolution(alg, simple_module(alg, e), cap, seed);
    if (tr.pd.kind == GlDim::Kind::DetectedInfinite) return tr.pd;
    if (tr.pd.kind == GlDim::Kind::ExceededCap) out = tr.pd;
    if (tr.pd.kind == GlDim::Kind::Finite && out.kind == GlDim::Kind::Finite)
      out.value = std::max(out.value, tr.pd.value);
  }
  return out;
}

struct HomDimReport {
  GlDim gl_dim;
  DomDim dom_dim;
  std::vector<std::vector<int>> cartan; // indexed by exps x exps
  bool operator==(const HomDimReport& o) const {
    return gl_dim == o.gl_dim && dom_dim == o.dom_dim;
  }
};

inline HomDimReport homdim_report(const NakayamaData& u, const GeneratorModule& m, int cap = 64,
                                  std::uint64_t seed = 0) {
  StructureConstantAlgebra alg = realize_block(u, m);
  HomDimReport rep;
  rep.gl_dim = global_dimension(alg, cap, seed);
  rep.dom_dim = dominant_dimension(u, m);
  for (int a : m.exps) {
    std::vector<int> row;
    for (int b : m.exps) row.push_back(std::min(a, b));
    rep.cartan.push_back(std::move(row));
  }
  return rep;
}

inline nlohmann::json gl_dim_to_json(const GlDim& g) {
  switch (g.kind) {
    case GlDim::Kind::Finite: return {{"kind", "Finite"}, {"value", g.value}};
    case GlDim::Kind::DetectedInfinite: return {{"kind", "DetectedInfinite"}};
    default: return {{"kind", "ExceededCap"}, {"cap", g.value}};
  }
}
inline nlohmann::json dom_dim_to_json(const DomDim& d) {
  if (d.infinite) return {{"kind", "Infinite"}};
  return {{"kind", "Finite"}, {"value", d.value}};
}
inline nlohmann::json homdim_to_json(const HomDimReport& r, const NakayamaData& u,
                                     const GeneratorModule& m) {
  return {{"p", u.p},      {"u", u.u},
          {"n", u.n},      {"exps", m.exps},
          {"gl_dim", gl_dim_to_json(r.gl_dim)}, {"dom_dim", dom_dim_to_json(r.dom_dim)},
          {"cartan", r.cartan}};
}

} // namespace cma

#endif
