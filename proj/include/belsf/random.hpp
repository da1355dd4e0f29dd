#pragma once

// Seeded sampling of field elements, maps, presemifields and configurations.
// Draws reduce raw mt19937_64 output modulo the range, so a seed yields the
// same objects on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "belsf/bel.hpp"
#include "belsf/gf.hpp"
#include "belsf/linpoly.hpp"
#include "belsf/rank2.hpp"
#include "belsf/semifield.hpp"

namespace belsf {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  Elem elem(const Field& F) { return Elem{static_cast<std::uint32_t>(below(F.order()))}; }
  Elem nonzero(const Field& F) { return Elem{static_cast<std::uint32_t>(1 + below(F.order() - 1))}; }

  LinPoly linpoly(const Field& F) {
    LinPoly f = lp::zero(F);
    for (auto& c : f.c) c = elem(F);
    return f;
  }

  LinPoly invertible_linpoly(const Field& F) {
    for (;;) {
      LinPoly f = linpoly(F);
      if (lp::is_invertible(F, f)) return f;
    }
  }

  CubicalMult cubical(const Field& F) {
    CubicalMult C = sf::zero(F);
    for (auto& c : C.c) c = elem(F);
    return C;
  }

  CubicalMult symmetric_cubical(const Field& F) {
    CubicalMult C = sf::zero(F);
    for (unsigned i = 0; i < F.n(); ++i)
      for (unsigned j = i; j < F.n(); ++j) C.at(i, j) = C.at(j, i) = elem(F);
    return C;
  }

  /// Rejection sampling of uniform arrays; after `attempts` failures, a random
  /// isotope C(A(x) B(y)) of the field is returned.
  CubicalMult presemifield(const Field& F, unsigned attempts = 64) {
    for (unsigned k = 0; k < attempts; ++k) {
      CubicalMult C = cubical(F);
      if (sf::is_presemifield(F, C)) return C;
    }
    const LinPoly A = invertible_linpoly(F), B = invertible_linpoly(F), Cm = invertible_linpoly(F);
    return sf::cubical_from_bilinear(F, [&](Elem x, Elem y) {
      return lp::evaluate(F, Cm, F.mul(lp::evaluate(F, A, x), lp::evaluate(F, B, y)));
    });
  }

  /// Square matrix over GF(q^n) with its inverse, row-major.
  std::pair<std::vector<Elem>, std::vector<Elem>> gl_matrix(const Field& F, unsigned r) {
    for (;;) {
      std::vector<Elem> M(std::size_t{r} * r);
      for (auto& m : M) m = elem(F);
      if (auto inv = invert(F, M, r)) return {M, *inv};
    }
  }

  BelConfig config(const Field& F, unsigned r) {
    BelConfig B;
    B.r = r;
    for (unsigned i = 0; i < r; ++i) B.f.push_back(linpoly(F));
    for (unsigned i = 0; i < r; ++i) B.g.push_back(linpoly(F));
    return B;
  }

  /// Random tuples with dim U = n and dim W = rn - n.
  BelConfig config_with_dims(const Field& F, unsigned r) {
    for (;;) {
      BelConfig B = config(F, r);
      if (bel::dims_ok(F, B)) return B;
    }
  }

  /// A BEL-configuration: rejection sampling first, then a planted one. For
  /// r = n that is the canonical configuration of a random presemifield moved
  /// by a random element of GL(r, q^n); for r = 2 a random BEL pair.
  BelConfig bel_config(const Field& F, unsigned r, unsigned attempts = 64) {
    for (unsigned k = 0; k < attempts; ++k) {
      BelConfig B = config(F, r);
      if (bel::dims_ok(F, B) && bel::is_bel(F, B)) return B;
    }
    if (r == F.n()) {
      const BelConfig B = bel::canonical_config(F, presemifield(F));
      auto [M, Minv] = gl_matrix(F, r);
      return bel::apply_gl(F, B, M, Minv);
    }
    if (r == 2) return rank2::to_config(F, bel_pair(F));
    throw DomainError("no planted BEL-configuration for this r");
  }

  /// (a, b) with xy + b(a(x) y) free of zero divisors.
  Rank2Pair bel_pair(const Field& F) {
    for (;;) {
      Rank2Pair P{linpoly(F), linpoly(F)};
      if (rank2::bel_ok(F, P)) return P;
    }
  }

 private:
  std::mt19937_64 rng_;

  static std::optional<std::vector<Elem>> invert(const Field& F, std::vector<Elem> M, unsigned r) {
    std::vector<Elem> I(std::size_t{r} * r, F.zero());
    for (unsigned i = 0; i < r; ++i) I[i * r + i] = F.one();
    for (unsigned c = 0; c < r; ++c) {
      unsigned p = c;
      while (p < r && M[p * r + c].v == 0) ++p;
      if (p == r) return std::nullopt;
      for (unsigned k = 0; k < r; ++k) {
        std::swap(M[c * r + k], M[p * r + k]);
        std::swap(I[c * r + k], I[p * r + k]);
      }
      const Elem iv = F.inv(M[c * r + c]);
      for (unsigned k = 0; k < r; ++k) {
        M[c * r + k] = F.mul(M[c * r + k], iv);
        I[c * r + k] = F.mul(I[c * r + k], iv);
      }
      for (unsigned row = 0; row < r; ++row) {
        if (row == c || M[row * r + c].v == 0) continue;
        const Elem f = M[row * r + c];
        for (unsigned k = 0; k < r; ++k) {
          M[row * r + k] = F.sub(M[row * r + k], F.mul(f, M[c * r + k]));
          I[row * r + k] = F.sub(I[row * r + k], F.mul(f, I[c * r + k]));
        }
      }
    }
    return I;
  }
};

}  // namespace belsf
