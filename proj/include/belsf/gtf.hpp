#pragma once

// Generalized twisted fields x o y = xy - c x^alpha y^beta with
// alpha = x^(q^a), beta = x^(q^b).

#include <optional>
#include <string>

#include "belsf/errors.hpp"
#include "belsf/gf.hpp"
#include "belsf/semifield.hpp"

namespace belsf {

struct GtfParams {
  Elem c;
  unsigned a = 0;
  unsigned b = 0;
  friend bool operator==(const GtfParams&, const GtfParams&) = default;
};

namespace gtf {

inline GtfParams make(const Field& F, Elem c, long long a, long long b) { return GtfParams{c, F.aut(a).k, F.aut(b).k}; }

/// Index d of H = {x^(alpha-1) y^(beta-1)} = <g^d> in the multiplicative group.
inline std::uint64_t product_set_index(const Field& F, unsigned a, unsigned b) {
  const std::uint64_t N = std::uint64_t{F.order()} - 1;
  const std::uint64_t ua = numth::ipow(F.q(), a) - 1, ub = numth::ipow(F.q(), b) - 1;
  return numth::gcd(numth::gcd(ua, ub), N);
}

/// c in {x^(alpha-1) y^(beta-1) : x, y != 0}.
inline bool in_product_set(const Field& F, Elem c, unsigned a, unsigned b) {
  if (c.v == 0) return false;
  const std::uint64_t N = std::uint64_t{F.order()} - 1;
  return F.pow(c, N / product_set_index(F, a, b)) == F.one();
}

/// Exhaustive enumeration of the product set, for cross-checking.
inline std::vector<bool> product_set_bruteforce(const Field& F, unsigned a, unsigned b) {
  std::vector<bool> in(F.order(), false);
  for (std::uint32_t x = 1; x < F.order(); ++x) {
    const Elem xa = F.div(F.frob(Elem{x}, Aut{a}), Elem{x});
    for (std::uint32_t y = 1; y < F.order(); ++y)
      in[F.mul(xa, F.div(F.frob(Elem{y}, Aut{b}), Elem{y})).v] = true;
  }
  return in;
}

inline bool valid(const Field& F, const GtfParams& P) {
  if (P.a >= F.n() || P.b >= F.n()) return false;
  return P.c.v != 0 && !in_product_set(F, P.c, P.a, P.b);
}

/// Proper: a, b nonzero and distinct. Improper valid GTFs are isotopic to the field.
inline bool proper(const GtfParams& P) { return P.a != 0 && P.b != 0 && P.a != P.b; }

inline void require_valid(const Field& F, const GtfParams& P) {
  if (!valid(F, P)) throw ValidityError("GTF parameters (c=" + std::to_string(P.c.v) + ", a=" + std::to_string(P.a) + ", b=" + std::to_string(P.b) + ") are not valid");
}

inline CubicalMult to_cubical(const Field& F, const GtfParams& P) {
  require_valid(F, P);
  CubicalMult C = sf::field_cubical(F);
  C.at(P.a, P.b) = F.sub(C.at(P.a, P.b), P.c);
  return C;
}

inline Elem mult(const Field& F, const GtfParams& P, Elem x, Elem y) {
  return F.sub(F.mul(x, y), F.mul(P.c, F.mul(F.frob(x, Aut{P.a}), F.frob(y, Aut{P.b}))));
}

/// Parameters of the Knuth derivative, exponents taken mod n.
inline GtfParams knuth(const Field& F, const GtfParams& P, KnuthWord w) {
  require_valid(F, P);
  const long long a = P.a, b = P.b;
  switch (w) {
    case KnuthWord::id: return P;
    case KnuthWord::t: return make(F, F.frob(P.c, -a), -a, b - a);
    case KnuthWord::d: return make(F, P.c, b, a);
    case KnuthWord::td: return make(F, F.frob(P.c, -a), b - a, -a);
    case KnuthWord::dt: return make(F, F.frob(P.c, -b), -b, a - b);
    case KnuthWord::dtd: return make(F, F.frob(P.c, -b), a - b, -b);
  }
  return P;
}

/// Closed-form isotopy test. Proper pairs use the classical criterion with
/// rho ranging over all p-power automorphisms; improper GTFs are isotopic to
/// the field and so only to each other.
inline bool isotopic(const Field& F, const GtfParams& P, const GtfParams& P2) {
  require_valid(F, P);
  require_valid(F, P2);
  if (!proper(P) || !proper(P2)) return !proper(P) && !proper(P2);
  const unsigned n = F.n();
  const unsigned autos = F.e() * n;
  if (P.a == P2.a && P.b == P2.b) {
    for (unsigned k = 0; k < autos; ++k)
      if (in_product_set(F, F.div(F.frob_p(P.c, k), P2.c), P.a, P.b)) return true;
  }
  if (P2.a == (n - P.a) % n && P2.b == (n - P.b) % n) {
    for (unsigned k = 0; k < autos; ++k)
      if (in_product_set(F, F.mul(F.frob_p(P2.c, k), P.c), P.a, P.b)) return true;
  }
  return false;
}

}  // namespace gtf
}  // namespace belsf
