#include <doctest.h>

#include <random>

#include "cma/field.hpp"

using namespace cma;

TEST_CASE("F_p canonical arithmetic") {
  auto F5 = field_traits<Fp>::ctx(FieldSpec::prime(5));
  CHECK(Fp(5, 2).inv() == Fp(5, 3)); // 2*3 = 6 = 1 mod 5
  auto F3 = field_traits<Fp>::ctx(FieldSpec::prime(3));
  CHECK(F3.from_int(2) + F3.from_int(2) == F3.from_int(1));
  CHECK(F5.from_int(-1) == F5.from_int(4));
  CHECK((-F5.from_int(0)) == F5.from_int(0));
}

TEST_CASE("rational arithmetic stays canonical") {
  Rat a(1, 2), b(3, 4);
  CHECK(a / b == Rat(2, 3));
  CHECK(rat_to_string(rat_from_string("-4/8")) == "-1/2");
  CHECK(rat_from_string("6/4") == Rat(3, 2));
}

TEST_CASE("field spec construction validates primality and perfectness") {
  CHECK_THROWS_AS(FieldSpec::prime(4), Error);
  CHECK_THROWS_AS(FieldSpec::prime(1), Error);
  CHECK(FieldSpec::prime(2147483647u).p == 2147483647u); // 2^31 - 1 is prime
  CHECK_THROWS_AS(FieldSpec::from_json(nlohmann::json{{"type", "Fp(t)"}}), Error);
}

TEST_CASE("division by zero and field mixing are rejected") {
  CHECK_THROWS_AS(Fp(5, 0).inv(), Error);
  CHECK_THROWS_AS(Fp(5, 1) + Fp(7, 1), Error);
  CHECK_THROWS_AS((void)inv(Rat(0)), Error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(42);
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    auto ctx = field_traits<Fp>::ctx(FieldSpec::prime(p));
    for (int trial = 0; trial < 200; ++trial) {
      Fp a = field_traits<Fp>::random(ctx, rng);
      Fp b = field_traits<Fp>::random(ctx, rng);
      Fp c = field_traits<Fp>::random(ctx, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) {
        CHECK(a * a.inv() == ctx.from_int(1));
        // Fermat inverse agrees with extended Euclid
        CHECK(a.inv() == a.pow(p - 2));
      }
    }
  }
}

TEST_CASE("scalar JSON round trips") {
  auto F3 = field_traits<Fp>::ctx(FieldSpec::prime(3));
  CHECK(field_traits<Fp>::from_json(F3, field_traits<Fp>::to_json(F3.from_int(2))) == F3.from_int(2));
  auto Q = field_traits<Rat>::ctx(FieldSpec::rationals());
  Rat q(7, 3);
  CHECK(field_traits<Rat>::from_json(Q, field_traits<Rat>::to_json(q)) == q);
  CHECK(FieldSpec::from_json(FieldSpec::prime(3).to_json()) == FieldSpec::prime(3));
}
