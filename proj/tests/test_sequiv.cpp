#include <doctest.h>

#include <random>
#include <set>

#include "cma/sequiv.hpp"
#include "test_helpers.hpp"

using namespace cma;
using cma::testing::jordan;

namespace {

template <class S>
Poly<S> from_ints(const FieldCtx<S>& ctx, std::initializer_list<long long> cs) {
  std::vector<S> v;
  for (long long c : cs) v.push_back(ctx.from_int(c));
  return Poly<S>(std::move(v));
}

// multiset with a single irreducible x and the given exponents
template <class S>
ElementaryDivisorMultiset<S> nilpotent_type(const FieldCtx<S>& ctx, std::vector<int> exps) {
  ElementaryDivisorMultiset<S> e;
  for (int k : exps) e.add(Poly<S>::x(ctx), k);
  e.canonicalize();
  return e;
}

PowerIndexSet random_index_set(std::mt19937_64& rng) {
  std::set<int> s;
  int count = 1 + static_cast<int>(rng() % 4);
  while (static_cast<int>(s.size()) < count) s.insert(1 + static_cast<int>(rng() % 12));
  return PowerIndexSet(s.begin(), s.end());
}

} // namespace

TEST_CASE("J-transform worked values and involution") {
  CHECK(j_transform({1, 3}) == PowerIndexSet{2, 3});
  CHECK(j_transform({2, 3}) == PowerIndexSet{1, 3});
  CHECK(j_transform({1, 2, 5}) == PowerIndexSet{3, 4, 5});
  CHECK(j_transform({5}) == PowerIndexSet{5});
  CHECK_THROWS_AS(j_transform({}), Error);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    PowerIndexSet t = random_index_set(rng);
    CHECK(j_transform(j_transform(t)) == t);
    PowerIndexSet jt = j_transform(t);
    CHECK(*std::max_element(t.begin(), t.end()) == *std::max_element(jt.begin(), jt.end()));
  }
}

TEST_CASE("maximal reducible divisors and power index sets") {
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());
  auto ec = elementary_divisors<Rat>(jordan<Rat>(Q, {{3, 0}, {1, 0}, {1, 1}}), Q);
  auto rc = maximal_reducible(ec);
  REQUIRE(rc.size() == 1);
  CHECK(rc[0].irr == Poly<Rat>::x(Q));
  CHECK(rc[0].exp == 3);
  CHECK(power_index_set(ec, rc[0]) == PowerIndexSet{1, 3});
  CHECK_THROWS_AS(power_index_set(ec, EldivItem<Rat>{from_ints<Rat>(Q, {-1, 1}), 1}), Error);
}

TEST_CASE("equivalent pair with unequal index sets related by J") {
  // c = J_3(0) + J_1(0) + J_1(1): P_c(x) = {1,3}
  // d = J_3(1) + J_2(1):          P_d(x-1) = {2,3}, J({2,3}) = {1,3}
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());
  auto ec = elementary_divisors<Rat>(jordan<Rat>(Q, {{3, 0}, {1, 0}, {1, 1}}), Q);
  auto ed = elementary_divisors<Rat>(jordan<Rat>(Q, {{3, 1}, {2, 1}}), Q);
  auto v = s_equivalent(ec, ed, Q);
  CHECK(v.equivalent);
  REQUIRE(v.certificate.has_value());
  REQUIRE(v.certificate->pairs.size() == 1);
  CHECK(v.certificate->pairs[0].mode == PairMode::JTransform);
  CHECK(validate_certificate(ec, ed, *v.certificate, Q));

  // strictly, {1,3} != {2,3}
  CHECK(!strict_s_equivalent(ec, ed, Q).equivalent);

  // same over F_5
  auto F5 = field_traits<Fp>::ctx(FieldSpec::prime(5));
  auto fc = elementary_divisors<Fp>(jordan<Fp>(F5, {{3, 0}, {1, 0}, {1, 1}}), F5);
  auto fd = elementary_divisors<Fp>(jordan<Fp>(F5, {{3, 1}, {2, 1}}), F5);
  auto vf = s_equivalent(fc, fd, F5);
  CHECK(vf.equivalent);
  CHECK(validate_certificate(fc, fd, *vf.certificate, F5));
}

TEST_CASE("inequivalent pair: index sets differ and are not J-related") {
  // P_c = {1,4,5}, P_d = {1,2,5}, J({1,2,5}) = {3,4,5}
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());
  auto ec = nilpotent_type<Rat>(Q, {5, 4, 1});
  auto ed = nilpotent_type<Rat>(Q, {5, 2, 1});
  auto v = s_equivalent(ec, ed, Q);
  CHECK(!v.equivalent);
  CHECK(!v.obstruction.empty());
  REQUIRE(v.hall_violator.size() == 1);
  CHECK(v.hall_violator[0].exp == 5);
}

TEST_CASE("size mismatch of maximal reducible sets is an obstruction") {
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());
  ElementaryDivisorMultiset<Rat> ec = nilpotent_type<Rat>(Q, {3, 1});
  ec.add(from_ints<Rat>(Q, {-1, 1}), 2);
  ec.canonicalize();
  auto ed = nilpotent_type<Rat>(Q, {3, 1});
  auto v = s_equivalent(ec, ed, Q);
  CHECK(!v.equivalent);
  CHECK(v.obstruction.find("size mismatch") != std::string::npos);
}

TEST_CASE("residue algebra isomorphism test") {
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());
  auto F4iso = [&](std::initializer_list<long long> a, std::initializer_list<long long> b) {
    return residue_iso(EldivItem<Rat>{from_ints<Rat>(Q, a), 2},
                       EldivItem<Rat>{from_ints<Rat>(Q, b), 2}, Q);
  };
  // Q(sqrt 2) both times: disc 8 vs 32 share squarefree kernel 2
  CHECK(F4iso({-2, 0, 1}, {-8, 0, 1}));
  CHECK(!F4iso({-2, 0, 1}, {-3, 0, 1}));    // sqrt 2 vs sqrt 3
  CHECK(!F4iso({-2, 0, 1}, {2, 0, 1}));     // sqrt 2 vs sqrt -2
  CHECK(F4iso({1, 1, 1}, {1, -1, 1}));      // disc -3 both
  // different Loewy lengths never match
  CHECK(!residue_iso(EldivItem<Rat>{Poly<Rat>::x(Q), 2}, EldivItem<Rat>{Poly<Rat>::x(Q), 3}, Q));
  // distinct cubics over Q are out of the supported class
  CHECK_THROWS_AS(residue_iso(EldivItem<Rat>{from_ints<Rat>(Q, {-2, 0, 0, 1}), 2},
                              EldivItem<Rat>{from_ints<Rat>(Q, {-3, 0, 0, 1}), 2}, Q),
                  Error);
  // over F_p, equal degree suffices
  auto F2 = field_traits<Fp>::ctx(FieldSpec::prime(2));
  ElementaryDivisorMultiset<Fp> e8;
  // the two irreducible cubics over F_2 give the same residue field F_8
  CHECK(residue_iso(EldivItem<Fp>{from_ints<Fp>(F2, {1, 1, 0, 1}), 2},
                    EldivItem<Fp>{from_ints<Fp>(F2, {1, 0, 1, 1}), 2}, F2));
}

namespace {

ElementaryDivisorMultiset<Fp> random_multiset(const FieldCtx<Fp>& ctx, std::mt19937_64& rng) {
  ElementaryDivisorMultiset<Fp> e;
  std::vector<Poly<Fp>> irrs = {Poly<Fp>::x(ctx), Poly<Fp>({ctx.from_int(-1), ctx.from_int(1)})};
  int count = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < count; ++i) {
    PowerIndexSet exps;
    std::set<int> s;
    int k = 1 + static_cast<int>(rng() % 3);
    while (static_cast<int>(s.size()) < k) s.insert(1 + static_cast<int>(rng() % 6));
    for (int x : s) e.add(irrs[i], x);
  }
  e.canonicalize();
  return e;
}

} // namespace

namespace {

// replace each group's distinct exponent set by its J-transform with
// probability 1/2; the result is equivalent to the input by construction
ElementaryDivisorMultiset<Fp> j_perturb(const ElementaryDivisorMultiset<Fp>& e,
                                        std::mt19937_64& rng) {
  ElementaryDivisorMultiset<Fp> out;
  for (const auto& g : e.groups) {
    PowerIndexSet t = g.distinct_exps();
    if (rng() % 2) t = j_transform(t);
    for (int x : t) out.add(g.irr, x);
  }
  out.canonicalize();
  return out;
}

} // namespace

TEST_CASE("the relation is reflexive, symmetric and transitive") {
  auto F3 = field_traits<Fp>::ctx(FieldSpec::prime(3));
  std::mt19937_64 rng(77);
  int equivalences = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto a = random_multiset(F3, rng);
    CHECK(s_equivalent(a, a, F3).equivalent); // reflexive
    auto b = (trial % 2) ? j_perturb(a, rng) : random_multiset(F3, rng);
    auto c = (trial % 2) ? j_perturb(b, rng) : random_multiset(F3, rng);
    auto ab = s_equivalent(a, b, F3);
    CHECK(ab.equivalent == s_equivalent(b, a, F3).equivalent); // symmetric
    if (ab.equivalent && s_equivalent(b, c, F3).equivalent) {
      CHECK(s_equivalent(a, c, F3).equivalent); // transitive
      ++equivalences;
    }
    if (ab.equivalent) CHECK(validate_certificate(a, b, *ab.certificate, F3));
  }
  CHECK(equivalences > 100); // the sampler actually produced related triples
}

TEST_CASE("corrupted certificates are rejected") {
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());
  auto ec = elementary_divisors<Rat>(jordan<Rat>(Q, {{3, 0}, {1, 0}, {1, 1}}), Q);
  auto ed = elementary_divisors<Rat>(jordan<Rat>(Q, {{3, 1}, {2, 1}}), Q);
  auto v = s_equivalent(ec, ed, Q);
  REQUIRE(v.certificate.has_value());
  auto bad = *v.certificate;
  bad.pairs[0].mode = PairMode::EqualSets; // sets are {1,3} vs {2,3}: not equal
  CHECK(!validate_certificate(ec, ed, bad, Q));
  auto bad2 = *v.certificate;
  bad2.pairs[0].src.exp = 2; // not a maximal reducible divisor of E_c
  CHECK(!validate_certificate(ec, ed, bad2, Q));
  auto bad3 = *v.certificate;
  bad3.pairs.clear(); // not a bijection
  CHECK(!validate_certificate(ec, ed, bad3, Q));
}

TEST_CASE("equal multisets are strictly equivalent") {
  auto F2 = field_traits<Fp>::ctx(FieldSpec::prime(2));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto e = random_multiset(F2, rng);
    auto v = strict_s_equivalent(e, e, F2);
    CHECK(v.equivalent);
    if (v.certificate)
      for (const auto& p : v.certificate->pairs) CHECK(p.mode == PairMode::EqualSets);
  }
}

TEST_CASE("verdict JSON shape") {
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());
  auto ec = nilpotent_type<Rat>(Q, {3, 1});
  auto ed = nilpotent_type<Rat>(Q, {3, 2});
  auto v = s_equivalent(ec, ed, Q);
  auto j = verdict_to_json(v);
  CHECK(j.at("equivalent").get<bool>() == v.equivalent);
  CHECK(j.contains("theorem_applicable"));
  if (v.equivalent) {
    CHECK(j.at("certificate").is_array());
    CHECK(j["certificate"][0].contains("mode"));
  } else {
    CHECK(j.contains("obstruction"));
  }
}
