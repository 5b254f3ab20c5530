#ifndef CMA_PERM_HPP
#define CMA_PERM_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "cma/sequiv.hpp"

namespace cma {

/// Bijection on {1..n} in one-line notation (1-based images).
struct Permutation {
  std::vector<int> images;

  Permutation() = default;
  explicit Permutation(std::vector<int> img) : images(std::move(img)) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
      if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
        throw Error("InvalidPermutation", "images are not a permutation of 1..n");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<bool> used(n, false);
    for (const auto& cyc : cycles)
      for (size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (a < 1 || a > n || used[a - 1])
          throw Error("InvalidPermutation", "cycles are not disjoint or out of range");
        used[a - 1] = true;
        img[a - 1] = b;
      }
    return Permutation(std::move(img));
  }

  int n() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; } // 1-based
  bool is_identity() const {
    for (int i = 1; i <= n(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }
  bool operator==(const Permutation& o) const { return images == o.images; }
};

/// Partition of n: cycle lengths sorted descending, fixed points as 1-cycles.
using CycleType = std::vector<int>;

inline std::vector<std::vector<int>> cycles_of(const Permutation& s) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(s.n(), false);
  for (int i = 1; i <= s.n(); ++i) {
    if (seen[i - 1]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j - 1]; j = s(j)) {
      seen[j - 1] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

inline CycleType cycle_type(const Permutation& s) {
  CycleType t;
  for (const auto& cyc : cycles_of(s)) t.push_back(static_cast<int>(cyc.size()));
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

inline void validate_cycle_type(const CycleType& t) {
  for (int part : t)
    if (part < 1) throw Error("InvalidCycleType", "cycle type parts must be positive");
}

/// canonical permutation with the given cycle type: consecutive cycles
inline Permutation permutation_of_type(const CycleType& t) {
  validate_cycle_type(t);
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : t) {
    std::vector<int> cyc(part);
    std::iota(cyc.begin(), cyc.end(), next);
    next += part;
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(cycles, next - 1);
}

/// c_sigma = sum of e_{i, sigma(i)}
template <class S>
MatrixX<S> permutation_matrix(const Permutation& s, const FieldCtx<S>& ctx) {
  const int n = s.n();
  MatrixX<S> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = ctx.from_int(0);
  for (int i = 1; i <= n; ++i) m(i - 1, s(i) - 1) = ctx.from_int(1);
  return m;
}

/// (r(sigma), s(sigma)): products of the p-regular / p-singular cycles, each
/// fixing the other's support. For p = 0, (sigma, id).
inline std::pair<Permutation, Permutation> regular_singular_parts(const Permutation& s,
                                                                  std::uint32_t p) {
  if (p == 0) return {s, Permutation::identity(s.n())};
  std::vector<std::vector<int>> reg, sing;
  for (const auto& cyc : cycles_of(s))
    (cyc.size() % p == 0 ? sing : reg).push_back(cyc);
  return {Permutation::from_cycles(reg, s.n()), Permutation::from_cycles(sing, s.n())};
}

inline int nu_p(int m, std::uint32_t p) {
  int v = 0;
  while (p > 0 && m % static_cast<int>(p) == 0) {
    m /= static_cast<int>(p);
    ++v;
  }
  return v;
}

inline int ipow(int base, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

/// Closed-form elementary divisors of a permutation matrix from its cycle
/// type: each part m = m' * p^v contributes g^{p^v} for every irreducible
/// factor g of x^{m'} - 1 (over Q: v = 0 throughout).
template <class S>
ElementaryDivisorMultiset<S> perm_elementary_divisors(const CycleType& t, const FieldCtx<S>& ctx,
                                                      std::uint64_t seed = 0) {
  validate_cycle_type(t);
  const std::uint32_t p = field_traits<S>::characteristic(ctx);
  ElementaryDivisorMultiset<S> out;
  for (int part : t) {
    int v = nu_p(part, p);
    int core = p ? part / ipow(static_cast<int>(p), v) : part;
    // x^core - 1 is squarefree here since gcd(core, p) = 1
    for (const auto& [g, mult] : factor(Poly<S>::xn_minus_one(ctx, core), ctx, seed).factors)
      out.add(g, p ? ipow(static_cast<int>(p), v) : 1, mult);
  }
  out.canonicalize();
  return out;
}

/// The exponent a of the exceptional divisor (x-1)^{p^a}: the maximal
/// (x-1)-power among the elementary divisors, guaranteed for permutation
/// matrices.
template <class S>
int exceptional_divisor(const ElementaryDivisorMultiset<S>& e, const FieldCtx<S>& ctx) {
  const std::uint32_t p = field_traits<S>::characteristic(ctx);
  Poly<S> xm1({ctx.from_int(-1), ctx.from_int(1)});
  for (const auto& g : e.groups)
    if (g.irr == xm1) {
      int m = g.max_exp();
      if (p == 0) {
        if (m != 1) throw Error("NotPermutationSpectrum", "(x-1)-power exponent must be 1 over Q");
        return 0;
      }
      int a = nu_p(m, p);
      if (ipow(static_cast<int>(p), a) != m)
        throw Error("NotPermutationSpectrum",
                    "maximal (x-1)-power exponent is not a power of the characteristic");
      return a;
    }
  throw Error("NotPermutationSpectrum", "no (x-1)-power elementary divisor present");
}

/// q_g = max nu_p(part) over the parts whose x^part - 1 is divisible by g.
template <class S>
int q_value(const Poly<S>& g, const CycleType& t, const FieldCtx<S>& ctx) {
  validate_cycle_type(t);
  const std::uint32_t p = field_traits<S>::characteristic(ctx);
  int best = -1;
  for (int part : t)
    if ((Poly<S>::xn_minus_one(ctx, part) % g).is_zero_poly()) best = std::max(best, nu_p(part, p));
  if (best < 0) throw Error("NoDividedCycle", "g divides no x^part - 1 of the cycle type");
  return best;
}

enum class PPowerJClass { Equal, TwoPowerLadder, Violation };

/// Classify p-power index sets with S = J(T): either S = T is a singleton, or
/// p = 2 and S = T = {2^u, 2^{u+1}}. Violation reports a failed precondition.
inline PPowerJClass p_power_j_constraint(const PowerIndexSet& s, const PowerIndexSet& t,
                                         std::uint32_t p) {
  auto is_p_power = [&](int m) {
    if (m < 1) return false;
    while (m % static_cast<int>(p) == 0) m /= static_cast<int>(p);
    return m == 1;
  };
  for (int m : s)
    if (!is_p_power(m)) throw Error("NotPPowers", "set contains a non-p-power");
  for (int m : t)
    if (!is_p_power(m)) throw Error("NotPPowers", "set contains a non-p-power");
  if (s.empty() || s != j_transform(t)) return PPowerJClass::Violation;
  if (s == t && s.size() == 1) return PPowerJClass::Equal;
  if (p == 2 && s == t && s.size() == 2 && s[1] == 2 * s[0]) return PPowerJClass::TwoPowerLadder;
  return PPowerJClass::Violation;
}

/// Realign a permutation-matrix certificate so the exceptional divisors map to
/// each other, by the two-swap construction: if (x-1)^{p^a} -> j and
/// k -> (x-1)^{p^b} with j, k not exceptional, swap the two images.
/// All modes become EqualSets (p-power index sets force equality).
template <class S>
SEquivCertificate<S> normalize_certificate(const SEquivCertificate<S>& cert,
                                           const FieldCtx<S>& ctx, int a, int b) {
  const std::uint32_t p = field_traits<S>::characteristic(ctx);
  if (p == 0) throw Error("InvalidCertificate", "exceptional alignment needs characteristic p > 0");
  Poly<S> xm1({ctx.from_int(-1), ctx.from_int(1)});
  EldivItem<S> exc_src{xm1, ipow(static_cast<int>(p), a)};
  EldivItem<S> exc_dst{xm1, ipow(static_cast<int>(p), b)};

  SEquivCertificate<S> out = cert;
  for (auto& pr : out.pairs) pr.mode = PairMode::EqualSets;
  if (cert.pairs.empty()) return out;

  int src_at = -1, dst_at = -1;
  for (size_t i = 0; i < out.pairs.size(); ++i) {
    if (out.pairs[i].src == exc_src) src_at = static_cast<int>(i);
    if (out.pairs[i].dst == exc_dst) dst_at = static_cast<int>(i);
  }
  if (src_at < 0 || dst_at < 0)
    throw Error("InvalidCertificate", "exceptional divisors are missing from the certificate");
  if (src_at == dst_at) return out; // already aligned
  if (a != b)
    throw Error("InvalidCertificate",
                "misaligned certificate requires equal exceptional exponents");
  std::swap(out.pairs[src_at].dst, out.pairs[dst_at].dst);
  return out;
}

/// Summary of a permutation class in characteristic p.
struct PermClassData {
  std::uint32_t p = 0;
  CycleType type, regular_type, singular_type;
  int exceptional = 0; // a with (x-1)^{p^a} exceptional (0 when p = 0)
};

inline PermClassData perm_class_data(const CycleType& t, std::uint32_t p) {
  validate_cycle_type(t);
  if (p != 0 && !is_prime_u32(p)) throw Error("InvalidField", "characteristic must be 0 or prime");
  PermClassData d;
  d.p = p;
  d.type = t;
  std::sort(d.type.begin(), d.type.end(), std::greater<int>());
  auto [r, s] = regular_singular_parts(permutation_of_type(d.type), p);
  d.regular_type = cycle_type(r);
  d.singular_type = cycle_type(s);
  for (int part : d.type) d.exceptional = std::max(d.exceptional, nu_p(part, p));
  return d;
}

inline nlohmann::json perm_class_to_json(const PermClassData& d) {
  return {{"p", d.p},
          {"cycle_type", d.type},
          {"regular_part_type", d.regular_type},
          {"singular_part_type", d.singular_type},
          {"exceptional", d.exceptional}};
}

/// CLI input: {"cycles":[[1,2,3],[4,5]],"n":8} or {"cycle_type":[6,2],"n":8}
inline Permutation permutation_from_json(const nlohmann::json& j) {
  if (j.contains("cycle_type")) {
    CycleType t = j.at("cycle_type").get<CycleType>();
    std::sort(t.begin(), t.end(), std::greater<int>());
    Permutation s = permutation_of_type(t);
    if (j.contains("n")) {
      int n = j.at("n").get<int>();
      if (n < s.n()) throw Error("InvalidPermutation", "cycle type does not fit in n points");
      std::vector<int> img = s.images;
      for (int i = s.n() + 1; i <= n; ++i) img.push_back(i);
      return Permutation(std::move(img));
    }
    return s;
  }
  return Permutation::from_cycles(j.at("cycles").get<std::vector<std::vector<int>>>(),
                                  j.at("n").get<int>());
}

} // namespace cma

#endif
