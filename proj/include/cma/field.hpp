#ifndef CMA_FIELD_HPP
#define CMA_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>

#include <json.hpp>

#include "cma/error.hpp"
#include "cma/fp.hpp"
#include "cma/rational.hpp"

namespace cma {

inline bool is_prime_u32(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Runtime description of the coefficient field: F_p (p prime, p < 2^31) or Q.
/// Both are perfect, so every irreducible polynomial over them is separable;
/// anything else is rejected here once and for all.
struct FieldSpec {
  enum class Kind { PrimeField, Rationals };
  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec prime(std::uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
      throw Error("InvalidField", "F_p requires a prime p < 2^31, got p=" + std::to_string(p));
    FieldSpec f;
    f.kind = Kind::PrimeField;
    f.p = p;
    return f;
  }
  static FieldSpec rationals() { return FieldSpec{}; }

  std::uint32_t characteristic() const { return kind == Kind::PrimeField ? p : 0; }
  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }

  nlohmann::json to_json() const {
    if (kind == Kind::PrimeField) return {{"type", "Fp"}, {"p", p}};
    return {{"type", "Q"}};
  }
  static FieldSpec from_json(const nlohmann::json& j) {
    std::string t = j.at("type").get<std::string>();
    if (t == "Fp") return prime(j.at("p").get<std::uint32_t>());
    if (t == "Q") return rationals();
    throw Error("InvalidField", "unknown field type \"" + t + "\"");
  }
};

/// Compile-time scalar traits used by the templated core. `Ctx` carries the
/// runtime data needed to mint constants (the modulus for F_p, nothing for Q).
template <class S>
struct field_traits;

template <>
struct field_traits<Fp> {
  struct Ctx {
    std::uint32_t p;
    Fp from_int(long long v) const { return Fp(p, v); }
    FieldSpec spec() const { return FieldSpec::prime(p); }
  };
  static Ctx ctx(const FieldSpec& f) {
    if (f.kind != FieldSpec::Kind::PrimeField) throw field_mismatch();
    return Ctx{f.p};
  }
  static std::uint32_t characteristic(const Ctx& c) { return c.p; }
  static Fp random(const Ctx& c, std::mt19937_64& rng) {
    return Fp(c.p, static_cast<long long>(rng() % c.p));
  }
  static nlohmann::json to_json(const Fp& a) { return static_cast<long long>(a.residue()); }
  static Fp from_json(const Ctx& c, const nlohmann::json& j) {
    if (j.is_string()) return Fp(c.p, std::stoll(j.get<std::string>()));
    return Fp(c.p, j.get<long long>());
  }
  static std::string to_string(const Fp& a) { return std::to_string(a.residue()); }
  // total order on canonical representatives, used only for canonical sorting
  static bool less(const Fp& a, const Fp& b) { return a.residue() < b.residue(); }
};

template <>
struct field_traits<Rat> {
  struct Ctx {
    Rat from_int(long long v) const { return Rat(static_cast<long>(v)); }
    FieldSpec spec() const { return FieldSpec::rationals(); }
  };
  static Ctx ctx(const FieldSpec& f) {
    if (f.kind != FieldSpec::Kind::Rationals) throw field_mismatch();
    return Ctx{};
  }
  static std::uint32_t characteristic(const Ctx&) { return 0; }
  static Rat random(const Ctx&, std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 21) - 10;
    long den = static_cast<long>(rng() % 9) + 1;
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  static nlohmann::json to_json(const Rat& a) {
    if (a.get_den() == 1 && a.get_num().fits_slong_p()) return a.get_num().get_si();
    return rat_to_string(a);
  }
  static Rat from_json(const Ctx&, const nlohmann::json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    return Rat(j.get<long>());
  }
  static std::string to_string(const Rat& a) { return rat_to_string(a); }
  static bool less(const Rat& a, const Rat& b) { return a < b; }
};

template <class S>
using FieldCtx = typename field_traits<S>::Ctx;

template <class S>
inline bool is_zero(const S& a) {
  if constexpr (std::is_same_v<S, Fp>) return a.is_zero();
  else return a == 0;
}

template <class S>
inline S inv(const S& a) {
  if constexpr (std::is_same_v<S, Fp>) {
    return a.inv();
  } else {
    if (a == 0) throw division_by_zero();
    return 1 / a;
  }
}

} // namespace cma

#endif
