#ifndef CMA_SEQUIV_HPP
#define CMA_SEQUIV_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cma/smith.hpp"

namespace cma {

/// Sorted set of distinct positive integers: the power indices P_c(f).
using PowerIndexSet = std::vector<int>;

/// J-transform: T = {m1 > ... > ms} -> {m1} u {m1 - mi : i >= 2}.
/// An involution on finite sets of positive integers.
inline PowerIndexSet j_transform(const PowerIndexSet& t) {
  if (t.empty()) throw Error("EmptySet", "J-transform of the empty set");
  int m1 = *std::max_element(t.begin(), t.end());
  PowerIndexSet out{m1};
  for (int m : t)
    if (m != m1) out.push_back(m1 - m);
  std::sort(out.begin(), out.end());
  return out;
}

template <class S>
struct EldivItem {
  Poly<S> irr;
  int exp = 0;
  bool operator==(const EldivItem& o) const { return exp == o.exp && irr == o.irr; }
};

/// All reducible elementary divisors maximal under divisibility: one item per
/// irreducible whose top exponent is >= 2.
template <class S>
std::vector<EldivItem<S>> maximal_reducible(const ElementaryDivisorMultiset<S>& e) {
  std::vector<EldivItem<S>> out;
  for (const auto& g : e.groups)
    if (g.max_exp() >= 2) out.push_back({g.irr, g.max_exp()});
  return out;
}

/// P_c(f): the distinct exponents of f's irreducible in E_c, ascending.
template <class S>
PowerIndexSet power_index_set(const ElementaryDivisorMultiset<S>& e, const EldivItem<S>& f) {
  for (const auto& g : e.groups)
    if (g.irr == f.irr) {
      if (g.max_exp() != f.exp || f.exp < 2)
        throw Error("NotMaximalReducible", "item is not a maximal reducible elementary divisor");
      return g.distinct_exps();
    }
  throw Error("NotMaximalReducible", "irreducible not present in the multiset");
}

namespace detail {

/// squarefree kernel of a nonzero rational, as a signed integer: the canonical
/// representative of its class in Q* / (Q*)^2
inline mpz_class squarefree_kernel(const Rat& q) {
  mpz_class n = q.get_num() * q.get_den();
  mpz_class out = n < 0 ? -1 : 1;
  n = abs(n);
  if (n > mpz_class("1000000000000"))
    throw Error("UnsupportedRationalIsoTest", "discriminant too large to factor");
  for (mpz_class d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e % 2) out *= d;
  }
  return out * n;
}

} // namespace detail

/// Decide R[x]/(p^k) = R[x]/(q^l) as R-algebras. The Loewy lengths must agree
/// (k = l); the residue fields must be isomorphic: over F_p that is degree
/// equality, over Q we support p = q and the quadratic discriminant test.
template <class S>
bool residue_iso(const EldivItem<S>& f, const EldivItem<S>& g, const FieldCtx<S>& ctx) {
  if (f.exp != g.exp) return false;
  if (f.irr == g.irr) return true;
  if (f.irr.degree() != g.irr.degree()) return false;
  if constexpr (std::is_same_v<S, Fp>) {
    (void)ctx;
    return true; // finite fields of equal order are isomorphic
  } else {
    if (f.irr.degree() == 1) return true;
    if (f.irr.degree() == 2) {
      auto disc = [](const Poly<Rat>& q) -> Rat { return q[1] * q[1] - Rat(4) * q[0]; };
      return detail::squarefree_kernel(disc(f.irr)) == detail::squarefree_kernel(disc(g.irr));
    }
    throw Error("UnsupportedRationalIsoTest",
                "number-field isomorphism over Q supported only for equal polynomials or degree <= 2");
  }
}

enum class PairMode { EqualSets, JTransform };

template <class S>
struct SEquivCertificate {
  struct Pair {
    EldivItem<S> src, dst;
    PairMode mode;
  };
  std::vector<Pair> pairs;
};

template <class S>
struct SEquivVerdict {
  bool equivalent = false;
  std::optional<SEquivCertificate<S>> certificate;
  std::string obstruction;                       // human-readable reason when not equivalent
  std::vector<EldivItem<S>> hall_violator;       // smallest Hall-violating subset of R_c, if any
  bool theorem_applicable = true;
};

/// separability of the minimal polynomial implied by the multiset
template <class S>
bool multiset_separable(const ElementaryDivisorMultiset<S>& e, const FieldCtx<S>& ctx) {
  if (field_traits<S>::characteristic(ctx) == 0) return true;
  for (const auto& g : e.groups) {
    Poly<S> d = g.irr.derivative();
    if (d.is_zero_poly() || gcd(g.irr, d).degree() != 0) return false;
  }
  return true;
}

namespace detail {

template <class S>
bool pair_compatible(const ElementaryDivisorMultiset<S>& ec, const ElementaryDivisorMultiset<S>& ed,
                     const EldivItem<S>& f, const EldivItem<S>& g, const FieldCtx<S>& ctx,
                     bool strict, PairMode& mode) {
  if (!residue_iso(f, g, ctx)) return false;
  PowerIndexSet pc = power_index_set(ec, f);
  PowerIndexSet pd = power_index_set(ed, g);
  if (pc == pd) {
    mode = PairMode::EqualSets; // canonical choice when both conditions hold
    return true;
  }
  if (!strict && pc == j_transform(pd)) {
    mode = PairMode::JTransform;
    return true;
  }
  return false;
}

/// lexicographically first perfect matching by backtracking (R-sets are tiny)
inline bool find_matching(const std::vector<std::vector<int>>& adj, size_t i,
                          std::vector<int>& match) {
  if (i == adj.size()) return true;
  for (int j : adj[i]) {
    if (std::find(match.begin(), match.end(), j) != match.end()) continue;
    match.push_back(j);
    if (find_matching(adj, i + 1, match)) return true;
    match.pop_back();
  }
  return false;
}

} // namespace detail

/// The paper's decision procedure: bijection between the maximal reducible
/// divisor sets matching residue algebras and power-index sets up to the
/// J-transform. `strict` admits only equal power-index sets.
template <class S>
SEquivVerdict<S> s_equivalent(const ElementaryDivisorMultiset<S>& ec,
                              const ElementaryDivisorMultiset<S>& ed, const FieldCtx<S>& ctx,
                              bool strict = false) {
  SEquivVerdict<S> verdict;
  verdict.theorem_applicable = multiset_separable(ec, ctx) || multiset_separable(ed, ctx);
  std::vector<EldivItem<S>> rc = maximal_reducible(ec);
  std::vector<EldivItem<S>> rd = maximal_reducible(ed);
  if (rc.size() != rd.size()) {
    verdict.obstruction = "size mismatch: |R_c| = " + std::to_string(rc.size()) +
                          ", |R_d| = " + std::to_string(rd.size());
    return verdict;
  }
  const size_t n = rc.size();
  std::vector<std::vector<int>> adj(n);
  std::vector<std::vector<PairMode>> modes(n, std::vector<PairMode>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      PairMode m;
      if (detail::pair_compatible(ec, ed, rc[i], rd[j], ctx, strict, m)) {
        adj[i].push_back(static_cast<int>(j));
        modes[i][j] = m;
      }
    }
  std::vector<int> match;
  if (detail::find_matching(adj, 0, match)) {
    SEquivCertificate<S> cert;
    for (size_t i = 0; i < n; ++i)
      cert.pairs.push_back({rc[i], rd[match[i]], modes[i][match[i]]});
    verdict.equivalent = true;
    verdict.certificate = std::move(cert);
    return verdict;
  }
  // smallest Hall-violating subset: |N(subset)| < |subset|
  for (size_t size = 1; size <= n; ++size) {
    std::vector<int> idx(size);
    std::function<bool(size_t, size_t)> pick = [&](size_t pos, size_t start) {
      if (pos == size) {
        std::vector<bool> nb(n, false);
        size_t count = 0;
        for (size_t k = 0; k < size; ++k)
          for (int j : adj[idx[k]])
            if (!nb[j]) { nb[j] = true; ++count; }
        return count < size;
      }
      for (size_t v = start; v < n; ++v) {
        idx[pos] = static_cast<int>(v);
        if (pick(pos + 1, v + 1)) return true;
      }
      return false;
    };
    if (pick(0, 0)) {
      auto set_str = [](const PowerIndexSet& s) {
        std::string out = "{";
        for (size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
        return out + "}";
      };
      for (int k : idx) verdict.hall_violator.push_back(rc[k]);
      std::string msg = "no compatible bijection: power-index sets";
      for (int k : idx) msg += " " + set_str(power_index_set(ec, rc[k]));
      msg += " have too few matches among";
      for (const auto& g : rd) {
        PowerIndexSet pd = power_index_set(ed, g);
        msg += " " + set_str(pd) + " (J = " + set_str(j_transform(pd)) + ")";
      }
      verdict.obstruction = msg;
      return verdict;
    }
  }
  verdict.obstruction = "no compatible bijection";
  return verdict;
}

template <class S>
SEquivVerdict<S> strict_s_equivalent(const ElementaryDivisorMultiset<S>& ec,
                                     const ElementaryDivisorMultiset<S>& ed,
                                     const FieldCtx<S>& ctx) {
  return s_equivalent(ec, ed, ctx, /*strict=*/true);
}

/// Re-check a certificate against the multisets: bijection, residue_iso and
/// the claimed set equation per pair.
template <class S>
bool validate_certificate(const ElementaryDivisorMultiset<S>& ec,
                          const ElementaryDivisorMultiset<S>& ed,
                          const SEquivCertificate<S>& cert, const FieldCtx<S>& ctx,
                          bool strict = false) {
  std::vector<EldivItem<S>> rc = maximal_reducible(ec);
  std::vector<EldivItem<S>> rd = maximal_reducible(ed);
  if (cert.pairs.size() != rc.size() || cert.pairs.size() != rd.size()) return false;
  auto contains = [](const std::vector<EldivItem<S>>& v, const EldivItem<S>& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  std::vector<EldivItem<S>> seen_src, seen_dst;
  for (const auto& p : cert.pairs) {
    if (!contains(rc, p.src) || !contains(rd, p.dst)) return false;
    if (contains(seen_src, p.src) || contains(seen_dst, p.dst)) return false;
    seen_src.push_back(p.src);
    seen_dst.push_back(p.dst);
    if (!residue_iso(p.src, p.dst, ctx)) return false;
    PowerIndexSet pc = power_index_set(ec, p.src);
    PowerIndexSet pd = power_index_set(ed, p.dst);
    if (p.mode == PairMode::EqualSets) {
      if (pc != pd) return false;
    } else {
      if (strict || pc != j_transform(pd)) return false;
    }
  }
  return true;
}

template <class S>
nlohmann::json verdict_to_json(const SEquivVerdict<S>& v) {
  nlohmann::json j;
  j["equivalent"] = v.equivalent;
  j["theorem_applicable"] = v.theorem_applicable;
  if (v.certificate) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : v.certificate->pairs)
      pairs.push_back({{"src", {{"irr", to_display(p.src.irr)}, {"exp", p.src.exp}}},
                       {"dst", {{"irr", to_display(p.dst.irr)}, {"exp", p.dst.exp}}},
                       {"mode", p.mode == PairMode::EqualSets ? "EqualSets" : "JTransform"}});
    j["certificate"] = pairs;
  } else {
    j["obstruction"] = v.obstruction;
    if (!v.hall_violator.empty()) {
      nlohmann::json hv = nlohmann::json::array();
      for (const auto& it : v.hall_violator)
        hv.push_back({{"irr", to_display(it.irr)}, {"exp", it.exp}});
      j["hall_violator"] = hv;
    }
  }
  return j;
}

} // namespace cma

#endif
