#pragma once

// BEL-configurations (D_{r,n,q}, U_f, W_g) in V(rn, q) = GF(q^n)^r with
//   U_f = {(f_1(x), ..., f_r(x))},  W_g = {v : sum_i g_i(v_i) = 0}
// and the presemifield S_{f,g}(x, y) = sum_i g_i(f_i(x) y).

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "belsf/errors.hpp"
#include "belsf/gf.hpp"
#include "belsf/linpoly.hpp"
#include "belsf/matrix.hpp"
#include "belsf/semifield.hpp"

namespace belsf {

struct BelConfig {
  unsigned r = 0;
  std::vector<LinPoly> f;
  std::vector<LinPoly> g;
  friend bool operator==(const BelConfig&, const BelConfig&) = default;
};

using RnVector = std::vector<Elem>;

namespace bel {

inline void check_shape(const Field& F, const BelConfig& B) {
  if (B.r < 2) throw DomainError("BEL-configurations require r >= 2");
  if (B.f.size() != B.r || B.g.size() != B.r) throw DomainError("f and g must have r entries");
  for (const auto& h : B.f) lp::check_len(F, h);
  for (const auto& h : B.g) lp::check_len(F, h);
}

/// F: x -> (f_1(x), ..., f_r(x)) as an rn x n matrix over GF(q).
inline FqMatrix f_matrix(const Field& F, const BelConfig& B) {
  const unsigned n = F.n();
  FqMatrix M(std::size_t{B.r} * n, n);
  for (unsigned i = 0; i < B.r; ++i) {
    const FqMatrix fi = lp::to_matrix(F, B.f[i]);
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b) M(i * n + a, b) = fi(a, b);
  }
  return M;
}

/// G: (x_1, ..., x_r) -> sum_i g_i(x_i) as an n x rn matrix over GF(q).
inline FqMatrix g_matrix(const Field& F, const BelConfig& B) {
  const unsigned n = F.n();
  FqMatrix M(n, std::size_t{B.r} * n);
  for (unsigned i = 0; i < B.r; ++i) {
    const FqMatrix gi = lp::to_matrix(F, B.g[i]);
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b) M(a, i * n + b) = gi(a, b);
  }
  return M;
}

/// dim U_f = n and dim W_g = rn - n.
inline bool dims_ok(const Field& F, const BelConfig& B) {
  check_shape(F, B);
  return f_matrix(F, B).rank(F) == F.n() && g_matrix(F, B).rank(F) == F.n();
}

inline void require_dims(const Field& F, const BelConfig& B) {
  if (!dims_ok(F, B)) throw DimensionError("U_f must have dimension n and W_g dimension rn - n");
}

inline Elem mult(const Field& F, const BelConfig& B, Elem x, Elem y) {
  Elem s = F.zero();
  for (unsigned i = 0; i < B.r; ++i) s = F.add(s, lp::evaluate(F, B.g[i], F.mul(lp::evaluate(F, B.f[i], x), y)));
  return s;
}

/// c_{a+b, b} accumulates g_{ib} f_{ia}^(q^b).
inline CubicalMult to_cubical(const Field& F, const BelConfig& B) {
  check_shape(F, B);
  const unsigned n = F.n();
  CubicalMult C = sf::zero(F);
  for (unsigned i = 0; i < B.r; ++i)
    for (unsigned a = 0; a < n; ++a) {
      if (B.f[i].c[a].v == 0) continue;
      for (unsigned b = 0; b < n; ++b) {
        if (B.g[i].c[b].v == 0) continue;
        Elem& cell = C.at((a + b) % n, b);
        cell = F.add(cell, F.mul(B.g[i].c[b], F.frob(B.f[i].c[a], Aut{b})));
      }
    }
  return C;
}

inline bool is_bel(const Field& F, const BelConfig& B, unsigned jobs = 1) {
  require_dims(F, B);
  return sf::is_presemifield(F, to_cubical(F, B), jobs);
}

/// Graphs of y -> S(x, y) for every x, plus A_infinity.
inline SemifieldSpread spread(const Field& F, const BelConfig& B) {
  if (!is_bel(F, B)) throw ValidityError("bel_spread: not a BEL-configuration");
  const CubicalMult C = to_cubical(F, B);
  SemifieldSpread S;
  for (std::uint32_t x = 0; x < F.order(); ++x) S.graphs.push_back(sf::left_mult(F, C, Elem{x}));
  S.has_infinity = true;
  sf::canonicalize(S);
  return S;
}

/// v != 0 with B(v) contained in W_g, normalized so the first nonzero entry is 1.
inline std::optional<RnVector> find_spread_element_in_W(const Field& F, const BelConfig& B) {
  require_dims(F, B);
  const unsigned n = F.n(), r = B.r;
  // Unknown (i, k) is the X^k-coordinate of v_i; row (l, m) is the X^m-coordinate
  // of sum_i g_i(v_i X^l).
  FqMatrix M(std::size_t{n} * n, std::size_t{r} * n);
  for (unsigned i = 0; i < r; ++i)
    for (unsigned k = 0; k < n; ++k)
      for (unsigned l = 0; l < n; ++l) {
        const auto col = F.coords(lp::evaluate(F, B.g[i], F.mul(F.basis(k), F.basis(l))));
        for (unsigned m = 0; m < n; ++m) M(l * n + m, i * n + k) = col[m];
      }
  const auto ker = M.kernel_basis(F);
  if (ker.empty()) return std::nullopt;
  RnVector v(r);
  for (unsigned i = 0; i < r; ++i) {
    std::vector<std::uint32_t> c(ker[0].begin() + i * n, ker[0].begin() + (i + 1) * n);
    v[i] = F.from_coords(c);
  }
  const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e.v != 0; });
  const Elem s = F.inv(*lead);
  for (auto& e : v) e = F.mul(e, s);
  return v;
}

/// Drops the index k of the first nonzero entry of a spread element in W_g.
inline BelConfig reduce_r(const Field& F, const BelConfig& B) {
  if (B.r <= 2) throw DomainError("reduce_r: r must exceed 2");
  const auto v = find_spread_element_in_W(F, B);
  if (!v) throw NotReducibleError("reduce_r: W_g contains no element of the Desarguesian spread");
  const unsigned k = static_cast<unsigned>(std::find_if(v->begin(), v->end(), [](Elem e) { return e.v != 0; }) - v->begin());
  BelConfig out;
  out.r = B.r - 1;
  for (unsigned i = 0; i < B.r; ++i) {
    if (i == k) continue;
    out.f.push_back(lp::sub(F, B.f[i], lp::scale(F, (*v)[i], B.f[k])));
    out.g.push_back(B.g[i]);
  }
  return out;
}

/// (g^, f^) componentwise.
inline BelConfig perp_transpose(const Field& F, const BelConfig& B) {
  require_dims(F, B);
  BelConfig out;
  out.r = B.r;
  for (unsigned i = 0; i < B.r; ++i) {
    out.f.push_back(lp::adjoint(F, B.g[i]));
    out.g.push_back(lp::adjoint(F, B.f[i]));
  }
  return out;
}

/// psi_g(F(x)) : z -> sum_i g_i(f_i(x) z), indexed by x.
inline std::vector<LinPoly> psi_image(const Field& F, const BelConfig& B) {
  require_dims(F, B);
  std::vector<LinPoly> out;
  for (std::uint32_t x = 0; x < F.order(); ++x) {
    LinPoly h = lp::zero(F);
    for (unsigned i = 0; i < B.r; ++i)
      h = lp::add(F, h, lp::precompose_scalar(F, B.g[i], lp::evaluate(F, B.f[i], Elem{x})));
    out.push_back(std::move(h));
  }
  return out;
}

/// The configuration g_i = x^(q^i), f_i = l_i^(q^-i) with r = n, whose multiplication is C.
inline BelConfig canonical_config(const Field& F, const CubicalMult& C) {
  sf::check_shape(F, C);
  const unsigned n = F.n();
  BelConfig B;
  B.r = n;
  for (unsigned i = 0; i < n; ++i) {
    LinPoly li = lp::zero(F);
    for (unsigned a = 0; a < n; ++a) li.c[a] = C.at(a, i);
    B.f.push_back(lp::compose(F, lp::monomial(F, F.one(), -static_cast<long long>(i)), li));
    B.g.push_back(lp::monomial(F, F.one(), i));
  }
  return B;
}

/// The move (U, W) -> (U M, W M) for M in GL(r, q^n) (row-vector convention);
/// the multiplication is unchanged.  Minv is M^-1, both r x r row-major.
inline BelConfig apply_gl(const Field& F, const BelConfig& B, const std::vector<Elem>& M, const std::vector<Elem>& Minv) {
  const unsigned r = B.r;
  BelConfig out;
  out.r = r;
  for (unsigned j = 0; j < r; ++j) {
    LinPoly fj = lp::zero(F), gj = lp::zero(F);
    for (unsigned i = 0; i < r; ++i) {
      fj = lp::add(F, fj, lp::scale(F, M[i * r + j], B.f[i]));
      gj = lp::add(F, gj, lp::precompose_scalar(F, B.g[i], Minv[j * r + i]));
    }
    out.f.push_back(std::move(fj));
    out.g.push_back(std::move(gj));
  }
  return out;
}

// ---- the equivalent conditions of the BEL property, by enumeration ----

namespace detail {

inline RnVector canonical_point(const Field& F, RnVector v) {
  const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e.v != 0; });
  if (lead == v.end()) return v;
  const Elem s = F.inv(*lead);
  for (auto& e : v) e = F.mul(e, s);
  return v;
}

inline std::vector<RnVector> enumerate_U(const Field& F, const BelConfig& B) {
  std::vector<RnVector> out;
  for (std::uint32_t x = 1; x < F.order(); ++x) {
    RnVector v(B.r);
    for (unsigned i = 0; i < B.r; ++i) v[i] = lp::evaluate(F, B.f[i], Elem{x});
    out.push_back(std::move(v));
  }
  return out;
}

inline std::vector<RnVector> enumerate_W(const Field& F, const BelConfig& B) {
  const unsigned n = F.n();
  const auto basis = g_matrix(F, B).kernel_basis(F);
  std::vector<RnVector> out;
  const std::uint64_t total = numth::ipow(F.q(), static_cast<unsigned>(basis.size()));
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::vector<std::uint32_t> coords(std::size_t{B.r} * n, 0);
    std::uint64_t rest = idx;
    for (const auto& bv : basis) {
      const auto s = static_cast<std::uint32_t>(rest % F.q());
      rest /= F.q();
      if (s == 0) continue;
      for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = F.badd(coords[k], F.bmul(s, bv[k]));
    }
    RnVector v(B.r);
    for (unsigned i = 0; i < B.r; ++i)
      v[i] = F.from_coords(std::vector<std::uint32_t>(coords.begin() + i * n, coords.begin() + (i + 1) * n));
    out.push_back(std::move(v));
  }
  return out;
}

inline bool in_W(const Field& F, const BelConfig& B, const RnVector& v) {
  Elem s = F.zero();
  for (unsigned i = 0; i < B.r; ++i) s = F.add(s, lp::evaluate(F, B.g[i], v[i]));
  return s.v == 0;
}

}  // namespace detail

/// The five equivalent formulations, each evaluated by its own route.
struct BelProperties {
  bool zero_divisor_free = false;      // 1: S_{f,g} has no zero divisors
  bool spread_sets_disjoint = false;   // 2: B(U) and B(W) share no member
  bool U_avoids_BW = false;            // 3: U meets the point set of B(W) only in 0
  bool W_avoids_BU = false;            // 4: W meets the point set of B(U) only in 0
  bool no_multiples = false;           // 5: no lambda u in W for u in U nonzero
  bool all_agree() const {
    return zero_divisor_free == spread_sets_disjoint && zero_divisor_free == U_avoids_BW &&
           zero_divisor_free == W_avoids_BU && zero_divisor_free == no_multiples;
  }
};

inline BelProperties properties(const Field& F, const BelConfig& B) {
  require_dims(F, B);
  BelProperties P;
  bool zd = true;
  for (std::uint32_t x = 1; x < F.order() && zd; ++x)
    for (std::uint32_t y = 1; y < F.order(); ++y)
      if (mult(F, B, Elem{x}, Elem{y}).v == 0) {
        zd = false;
        break;
      }
  P.zero_divisor_free = zd;

  const auto U = detail::enumerate_U(F, B);
  const auto W = detail::enumerate_W(F, B);
  std::set<RnVector> pu, pw;
  for (const auto& u : U) pu.insert(detail::canonical_point(F, u));
  for (const auto& w : W) pw.insert(detail::canonical_point(F, w));

  P.spread_sets_disjoint = std::none_of(pu.begin(), pu.end(), [&](const RnVector& p) { return pw.count(p) != 0; });

  // A vector lies on the point set of B(M) iff its spread element meets M.
  P.U_avoids_BW = std::none_of(U.begin(), U.end(), [&](const RnVector& u) { return pw.count(detail::canonical_point(F, u)) != 0; });
  P.W_avoids_BU = std::none_of(W.begin(), W.end(), [&](const RnVector& w) { return pu.count(detail::canonical_point(F, w)) != 0; });

  bool nm = true;
  for (const auto& u : U) {
    for (std::uint32_t l = 1; l < F.order() && nm; ++l) {
      RnVector lu(u);
      for (auto& e : lu) e = F.mul(e, Elem{l});
      if (detail::in_W(F, B, lu)) nm = false;
    }
    if (!nm) break;
  }
  P.no_multiples = nm;
  return P;
}

// ---- symmetric rank-one decomposition and the symplectic configuration ----

struct SymplecticResult {
  std::vector<std::vector<Elem>> vectors;  // v_k with C = sum_k v_k v_k^T
  BelConfig config;                        // (f, f^) padded with zero maps to r >= 2
};

namespace detail {

inline void emit_scaled(const Field& F, Elem s, const std::vector<Elem>& w, std::vector<std::vector<Elem>>& out) {
  if (s.v == 0) return;
  auto push = [&](Elem a) {
    std::vector<Elem> v(w);
    for (auto& e : v) e = F.mul(e, a);
    out.push_back(std::move(v));
  };
  if (auto a = F.sqrt(s)) {
    push(*a);
    return;
  }
  // Odd characteristic: write s = a^2 + b^2.
  for (std::uint32_t a = 0; a < F.order(); ++a) {
    const Elem rest = F.sub(s, F.mul(Elem{a}, Elem{a}));
    if (auto b = F.sqrt(rest)) {
      push(Elem{a});
      push(*b);
      return;
    }
  }
  throw DomainError("no decomposition of a scalar into two squares");
}

}  // namespace detail

inline std::vector<std::vector<Elem>> symmetric_rank_one(const Field& F, const CubicalMult& C) {
  const unsigned n = C.n;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < i; ++j)
      if (C.at(i, j) != C.at(j, i)) throw DomainError("symplectic_config: array is not symmetric");
  CubicalMult M = C;
  std::vector<std::vector<Elem>> out;
  auto unit = [&](unsigned i) {
    std::vector<Elem> e(n, F.zero());
    e[i] = F.one();
    return e;
  };
  for (;;) {
    unsigned k = n;
    for (unsigned i = 0; i < n && k == n; ++i)
      if (M.at(i, i).v != 0) k = i;
    if (k < n) {
      std::vector<Elem> w(n);
      for (unsigned i = 0; i < n; ++i) w[i] = M.at(i, k);
      const Elem dinv = F.inv(M.at(k, k));
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) M.at(i, j) = F.sub(M.at(i, j), F.mul(dinv, F.mul(w[i], w[j])));
      detail::emit_scaled(F, dinv, w, out);
      continue;
    }
    unsigned pi = n, pj = n;
    for (unsigned i = 0; i < n && pi == n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if (M.at(i, j).v != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) break;
    const Elem c = M.at(pi, pj);
    std::vector<Elem> eij = unit(pi);
    eij[pj] = F.one();
    detail::emit_scaled(F, c, eij, out);
    detail::emit_scaled(F, F.neg(c), unit(pi), out);
    detail::emit_scaled(F, F.neg(c), unit(pj), out);
    M.at(pi, pj) = F.zero();
    M.at(pj, pi) = F.zero();
  }
  // Reconstruction check.
  CubicalMult R = sf::zero(F);
  for (const auto& v : out)
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) R.at(i, j) = F.add(R.at(i, j), F.mul(v[i], v[j]));
  if (R != C) throw Error("symmetric rank-one decomposition failed to reconstruct the input");
  return out;
}

/// Configuration (f, f^) with f_k(x) = sum_i v_{k,i} x^(q^i); its multiplication
/// is the dtd-derivative of the symmetric array C.
inline SymplecticResult symplectic_config(const Field& F, const CubicalMult& C) {
  sf::check_shape(F, C);
  SymplecticResult res;
  res.vectors = symmetric_rank_one(F, C);
  for (const auto& v : res.vectors) {
    LinPoly fk{v};
    res.config.g.push_back(lp::adjoint(F, fk));
    res.config.f.push_back(std::move(fk));
  }
  while (res.config.f.size() < 2) {
    res.config.f.push_back(lp::zero(F));
    res.config.g.push_back(lp::zero(F));
  }
  res.config.r = static_cast<unsigned>(res.config.f.size());
  return res;
}

}  // namespace bel
}  // namespace belsf
