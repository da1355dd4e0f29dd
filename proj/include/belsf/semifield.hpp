#pragma once

// Presemifields over GF(q) of dimension n, stored as cubical arrays:
// S(x, y) = sum_{i,j} c_ij x^(q^i) y^(q^j).

#include <algorithm>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "belsf/errors.hpp"
#include "belsf/gf.hpp"
#include "belsf/linpoly.hpp"
#include "belsf/parallel.hpp"

namespace belsf {

struct CubicalMult {
  unsigned n = 0;
  std::vector<Elem> c;  // row-major, c[i * n + j]

  Elem at(unsigned i, unsigned j) const { return c[i * n + j]; }
  Elem& at(unsigned i, unsigned j) { return c[i * n + j]; }
  friend bool operator==(const CubicalMult&, const CubicalMult&) = default;
};

enum class KnuthWord { id, t, d, td, dt, dtd };

inline constexpr KnuthWord kAllKnuthWords[] = {KnuthWord::id, KnuthWord::t,  KnuthWord::d,
                                               KnuthWord::td, KnuthWord::dt, KnuthWord::dtd};

inline std::string_view to_string(KnuthWord w) {
  switch (w) {
    case KnuthWord::id: return "id";
    case KnuthWord::t: return "t";
    case KnuthWord::d: return "d";
    case KnuthWord::td: return "td";
    case KnuthWord::dt: return "dt";
    case KnuthWord::dtd: return "dtd";
  }
  return "?";
}

inline KnuthWord parse_knuth_word(std::string_view s) {
  for (auto w : kAllKnuthWords)
    if (to_string(w) == s) return w;
  if (s == "tdt") return KnuthWord::dtd;
  throw ParseError("unknown Knuth word '" + std::string(s) + "'");
}

/// The set of graphs {(x, M(x))} plus optionally the subspace {(0, v)}.
struct SemifieldSpread {
  std::vector<LinPoly> graphs;  // kept sorted
  bool has_infinity = false;
  friend bool operator==(const SemifieldSpread&, const SemifieldSpread&) = default;
};

namespace sf {

inline void require_dim(const Field& F) {
  if (F.n() < 2) throw DomainError("presemifields require n >= 2");
}

inline CubicalMult zero(const Field& F) {
  require_dim(F);
  return CubicalMult{F.n(), std::vector<Elem>(std::size_t{F.n()} * F.n(), F.zero())};
}

/// The field multiplication xy.
inline CubicalMult field_cubical(const Field& F) {
  CubicalMult C = zero(F);
  C.at(0, 0) = F.one();
  return C;
}

inline void check_shape(const Field& F, const CubicalMult& C) {
  if (C.n != F.n() || C.c.size() != std::size_t{C.n} * C.n) throw DomainError("cubical array does not match the field");
}

inline Elem mult(const Field& F, const CubicalMult& C, Elem x, Elem y) {
  if (x.v == 0 || y.v == 0) return F.zero();
  const unsigned n = C.n;
  Elem xs[32], ys[32];
  for (unsigned i = 0; i < n; ++i) {
    xs[i] = F.frob(x, Aut{i});
    ys[i] = F.frob(y, Aut{i});
  }
  Elem s = F.zero();
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      const Elem cij = C.at(i, j);
      if (cij.v != 0) s = F.add(s, F.mul(cij, F.mul(xs[i], ys[j])));
    }
  return s;
}

/// R_y: x -> S(x, y), coefficients r_i(y) = sum_j c_ij y^(q^j).
inline LinPoly right_mult(const Field& F, const CubicalMult& C, Elem y) {
  LinPoly f = lp::zero(F);
  for (unsigned i = 0; i < C.n; ++i)
    for (unsigned j = 0; j < C.n; ++j)
      if (C.at(i, j).v != 0) f.c[i] = F.add(f.c[i], F.mul(C.at(i, j), F.frob(y, Aut{j})));
  return f;
}

/// L_x: y -> S(x, y), coefficients l_j(x) = sum_i c_ij x^(q^i).
inline LinPoly left_mult(const Field& F, const CubicalMult& C, Elem x) {
  LinPoly f = lp::zero(F);
  for (unsigned i = 0; i < C.n; ++i)
    for (unsigned j = 0; j < C.n; ++j)
      if (C.at(i, j).v != 0) f.c[j] = F.add(f.c[j], F.mul(C.at(i, j), F.frob(x, Aut{i})));
  return f;
}

/// Representatives of the projective points of GF(q^n) over GF(q): the
/// nonzero encodings whose lowest nonzero coordinate is 1.
inline std::vector<Elem> projective_points(const Field& F) {
  std::vector<Elem> out;
  for (std::uint32_t v = 1; v < F.order(); ++v) {
    std::uint32_t w = v;
    while (w % F.q() == 0) w /= F.q();
    if (w % F.q() == 1) out.push_back(Elem{v});
  }
  return out;
}

/// R_y nonsingular for every y != 0 (checked on projective representatives).
inline bool is_presemifield(const Field& F, const CubicalMult& C, unsigned jobs = 1) {
  check_shape(F, C);
  const auto pts = projective_points(F);
  return parallel_all(pts.size(), jobs, [&](std::size_t k) { return lp::is_invertible(F, right_mult(F, C, pts[k])); });
}

/// The array of an F_q-bilinear map given as a callable, by interpolation on basis pairs.
inline CubicalMult cubical_from_bilinear(const Field& F, const std::function<Elem(Elem, Elem)>& fn) {
  const unsigned n = F.n();
  CubicalMult C = zero(F);
  // rows[b].c[i] = r_i(X^b)
  std::vector<LinPoly> rows(n);
  for (unsigned b = 0; b < n; ++b) {
    std::vector<Elem> vals(n);
    for (unsigned a = 0; a < n; ++a) vals[a] = fn(F.basis(a), F.basis(b));
    rows[b] = lp::from_values(F, vals);
  }
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Elem> vals(n);
    for (unsigned b = 0; b < n; ++b) vals[b] = rows[b].c[i];
    const LinPoly ri = lp::from_values(F, vals);
    for (unsigned j = 0; j < n; ++j) C.at(i, j) = ri.c[j];
  }
  return C;
}

/// Coefficient transform of a Knuth word; words read left to right ("td" is t, then d).
inline CubicalMult knuth_raw(const Field& F, const CubicalMult& C, KnuthWord w) {
  check_shape(F, C);
  const unsigned n = C.n;
  auto m = [n](long long k) { return static_cast<unsigned>(((k % n) + n) % n); };
  CubicalMult out = zero(F);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      const long long I = i, J = j;
      Elem v;
      switch (w) {
        case KnuthWord::id: v = C.at(i, j); break;
        case KnuthWord::t: v = F.frob(C.at(m(-I), m(J - I)), Aut{i}); break;
        case KnuthWord::d: v = C.at(j, i); break;
        case KnuthWord::td: v = F.frob(C.at(m(-J), m(I - J)), Aut{j}); break;
        case KnuthWord::dt: v = F.frob(C.at(m(J - I), m(-I)), Aut{i}); break;
        case KnuthWord::dtd: v = F.frob(C.at(m(I - J), m(-J)), Aut{j}); break;
      }
      out.at(i, j) = v;
    }
  }
  return out;
}

inline CubicalMult knuth(const Field& F, const CubicalMult& C, KnuthWord w, unsigned jobs = 1) {
  if (!is_presemifield(F, C, jobs)) throw ValidityError("knuth: input is not a presemifield");
  return knuth_raw(F, C, w);
}

/// x * y = S(R_e^-1 x, L_e^-1 y); S(e, e) is its identity.
inline CubicalMult unitalize(const Field& F, const CubicalMult& C, Elem e) {
  if (e.v == 0) throw DomainError("unitalize: e must be nonzero");
  const LinPoly ri = lp::comp_inverse(F, right_mult(F, C, e));
  const LinPoly li = lp::comp_inverse(F, left_mult(F, C, e));
  return cubical_from_bilinear(F, [&](Elem x, Elem y) {
    return mult(F, C, lp::evaluate(F, ri, x), lp::evaluate(F, li, y));
  });
}

struct Nuclei {
  std::uint64_t left = 0, middle = 0, right = 0, centre = 0;
  friend bool operator==(const Nuclei&, const Nuclei&) = default;
};

namespace detail {

// Dimension over GF(q) of {a : phi(a, x, y) = 0 for all basis x, y} where phi
// is F_q-linear in a.
template <class Phi>
std::size_t solution_dim(const Field& F, const std::vector<Phi>& phis) {
  const unsigned n = F.n();
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& phi : phis)
    for (unsigned x = 0; x < n; ++x)
      for (unsigned y = 0; y < n; ++y) {
        std::vector<std::vector<std::uint32_t>> cols(n);
        for (unsigned a = 0; a < n; ++a) cols[a] = F.coords(phi(F.basis(a), F.basis(x), F.basis(y)));
        for (unsigned k = 0; k < n; ++k) {
          std::vector<std::uint32_t> row(n);
          for (unsigned a = 0; a < n; ++a) row[a] = cols[a][k];
          rows.push_back(std::move(row));
        }
      }
  FqMatrix M(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (unsigned a = 0; a < n; ++a) M(r, a) = rows[r][a];
  return n - M.rank(F);
}

}  // namespace detail

/// Nucleus orders of the unitalization at e = 1.
inline Nuclei nuclei(const Field& F, const CubicalMult& C) {
  if (!is_presemifield(F, C)) throw ValidityError("nuclei: input is not a presemifield");
  const CubicalMult U = unitalize(F, C, F.one());
  auto m = [&](Elem a, Elem b) { return mult(F, U, a, b); };
  using Phi = std::function<Elem(Elem, Elem, Elem)>;
  const Phi left = [&](Elem a, Elem x, Elem y) { return F.sub(m(m(a, x), y), m(a, m(x, y))); };
  const Phi mid = [&](Elem a, Elem x, Elem y) { return F.sub(m(m(x, a), y), m(x, m(a, y))); };
  const Phi right = [&](Elem a, Elem x, Elem y) { return F.sub(m(m(x, y), a), m(x, m(y, a))); };
  const Phi comm = [&](Elem a, Elem x, Elem) { return F.sub(m(a, x), m(x, a)); };
  auto order = [&](std::size_t dim) { return numth::ipow(F.q(), static_cast<unsigned>(dim)); };
  Nuclei N;
  N.left = order(detail::solution_dim<Phi>(F, {left}));
  N.middle = order(detail::solution_dim<Phi>(F, {mid}));
  N.right = order(detail::solution_dim<Phi>(F, {right}));
  N.centre = order(detail::solution_dim<Phi>(F, {left, mid, right, comm}));
  return N;
}

/// Exhaustive associativity scan of the unitalization at e = 1.
inline Nuclei nuclei_bruteforce(const Field& F, const CubicalMult& C) {
  const CubicalMult U = unitalize(F, C, F.one());
  const std::uint32_t Q = F.order();
  std::vector<Elem> table(std::size_t{Q} * Q);
  for (std::uint32_t x = 0; x < Q; ++x)
    for (std::uint32_t y = 0; y < Q; ++y) table[std::size_t{x} * Q + y] = mult(F, U, Elem{x}, Elem{y});
  auto m = [&](std::uint32_t a, std::uint32_t b) { return table[std::size_t{a} * Q + b].v; };
  Nuclei N;
  for (std::uint32_t a = 0; a < Q; ++a) {
    bool l = true, md = true, r = true, cm = true;
    for (std::uint32_t x = 0; x < Q; ++x) {
      if (m(a, x) != m(x, a)) cm = false;
      for (std::uint32_t y = 0; y < Q; ++y) {
        if (l && m(m(a, x), y) != m(a, m(x, y))) l = false;
        if (md && m(m(x, a), y) != m(x, m(a, y))) md = false;
        if (r && m(m(x, y), a) != m(x, m(y, a))) r = false;
      }
    }
    N.left += l;
    N.middle += md;
    N.right += r;
    N.centre += (l && md && r && cm);
  }
  return N;
}

inline void canonicalize(SemifieldSpread& S) { std::sort(S.graphs.begin(), S.graphs.end()); }

/// {A_y = graph of R_y} plus A_infinity.
inline SemifieldSpread spread_of(const Field& F, const CubicalMult& C) {
  if (!is_presemifield(F, C)) throw ValidityError("spread_of: input is not a presemifield");
  SemifieldSpread S;
  for (std::uint32_t y = 0; y < F.order(); ++y) S.graphs.push_back(right_mult(F, C, Elem{y}));
  S.has_infinity = true;
  canonicalize(S);
  return S;
}

inline SemifieldSpread dual_spread_epsilon(const Field& F, const SemifieldSpread& S) {
  SemifieldSpread D;
  for (const auto& g : S.graphs) D.graphs.push_back(lp::adjoint(F, g));
  D.has_infinity = S.has_infinity;
  canonicalize(D);
  return D;
}

/// b_eps((a, b), (c, d)) = tr(ad - bc)
inline Elem b_epsilon(const Field& F, Elem a, Elem b, Elem c, Elem d) {
  return F.trace(F.sub(F.mul(a, d), F.mul(b, c)));
}

/// q^n + 1 members covering every nonzero vector of V(2n, q) exactly once.
inline bool is_spread(const Field& F, const SemifieldSpread& S) {
  const std::uint64_t Q = F.order();
  if (S.graphs.size() + (S.has_infinity ? 1 : 0) != Q + 1) return false;
  std::vector<std::uint8_t> hits(Q * Q, 0);
  auto hit = [&](std::uint64_t idx) { return ++hits[idx] <= 1; };
  for (const auto& g : S.graphs)
    for (std::uint32_t x = 1; x < Q; ++x)
      if (!hit(x * Q + lp::evaluate(F, g, Elem{x}).v)) return false;
  if (S.has_infinity)
    for (std::uint32_t v = 1; v < Q; ++v)
      if (!hit(v)) return false;
  for (std::uint64_t i = 1; i < Q * Q; ++i)
    if (hits[i] != 1) return false;
  return true;
}

}  // namespace sf
}  // namespace belsf
