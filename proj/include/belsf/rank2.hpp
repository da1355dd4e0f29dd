#pragma once

// BEL-configurations in V(2n, q): normalized pairs (a, b) with
// S(x, y) = xy + b(a(x) y), the operations s, e, t, the GTF stabilizer
// action, and rank-two semifields.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "belsf/bel.hpp"
#include "belsf/errors.hpp"
#include "belsf/gtf.hpp"
#include "belsf/linpoly.hpp"
#include "belsf/semifield.hpp"

namespace belsf {

/// U = U_(1,a), W = W_(1,b).
struct Rank2Pair {
  LinPoly a;
  LinPoly b;
  friend bool operator==(const Rank2Pair&, const Rank2Pair&) = default;
  friend auto operator<=>(const Rank2Pair&, const Rank2Pair&) = default;
};

struct StabElement {
  bool swap = false;  // plain: (a, b) -> (k a^gamma, m b^delta); swap: (a, b) -> (k b^gamma, m a^delta)
  Elem k{1};
  Elem m{1};
  unsigned gamma = 0;
  unsigned delta = 0;
  friend bool operator==(const StabElement&, const StabElement&) = default;
};

namespace rank2 {

inline BelConfig to_config(const Field& F, const Rank2Pair& P) {
  return BelConfig{2, {lp::identity(F), P.a}, {lp::identity(F), P.b}};
}

inline Elem mult(const Field& F, const Rank2Pair& P, Elem x, Elem y) {
  return F.add(F.mul(x, y), lp::evaluate(F, P.b, F.mul(lp::evaluate(F, P.a, x), y)));
}

inline CubicalMult cubical(const Field& F, const Rank2Pair& P) { return bel::to_cubical(F, to_config(F, P)); }

/// xy + b(a(x) y) != 0 for x, y != 0.
inline bool bel_ok(const Field& F, const Rank2Pair& P) { return sf::is_presemifield(F, cubical(F, P)); }

inline void require_bel(const Field& F, const Rank2Pair& P) {
  if (!bel_ok(F, P)) throw DomainError("pair (a, b) does not satisfy the BEL property");
}

inline Rank2Pair s_raw(const Field&, const Rank2Pair& P) { return {P.b, P.a}; }
inline Rank2Pair e_raw(const Field& F, const Rank2Pair& P) { return {lp::adjoint(F, P.a), P.b}; }
inline Rank2Pair t_raw(const Field& F, const Rank2Pair& P) { return {lp::adjoint(F, P.b), lp::adjoint(F, P.a)}; }

inline Rank2Pair op_s(const Field& F, const Rank2Pair& P) {
  require_bel(F, P);
  return s_raw(F, P);
}
inline Rank2Pair op_e(const Field& F, const Rank2Pair& P) {
  require_bel(F, P);
  return e_raw(F, P);
}
inline Rank2Pair op_t(const Field& F, const Rank2Pair& P) {
  require_bel(F, P);
  return t_raw(F, P);
}

/// Applies a word over {s, e, t}, letters left to right; "id" and "" are the identity.
inline Rank2Pair apply_word(const Field& F, Rank2Pair P, std::string_view word) {
  if (word == "id") return P;
  for (char ch : word) {
    switch (ch) {
      case 's': P = s_raw(F, P); break;
      case 'e': P = e_raw(F, P); break;
      case 't': P = t_raw(F, P); break;
      default: throw ParseError("unknown group letter '" + std::string(1, ch) + "'");
    }
  }
  return P;
}

/// The eight elements of the group generated by s and e (t = ese, st = ts).
inline constexpr std::array<std::string_view, 8> kGroupWords = {"id", "s", "e", "es", "se", "ses", "t", "st"};

struct OrbitEntry {
  std::string word;
  Rank2Pair pair;
};

inline std::vector<OrbitEntry> orbit8(const Field& F, const Rank2Pair& P) {
  require_bel(F, P);
  std::vector<OrbitEntry> out;
  for (auto w : kGroupWords) out.push_back({std::string(w), apply_word(F, P, w)});
  return out;
}

inline std::size_t distinct_pairs(const std::vector<OrbitEntry>& orbit) {
  std::vector<Rank2Pair> ps;
  for (const auto& e : orbit) ps.push_back(e.pair);
  std::sort(ps.begin(), ps.end());
  return static_cast<std::size_t>(std::unique(ps.begin(), ps.end()) - ps.begin());
}

// ---- normalization ----

struct NormalizeResult {
  Rank2Pair pair;
  std::array<Elem, 4> move;  // M row-major; U' = U M^-1, W' = W M^-1
  bool identity_move = true;
  LinPoly A;  // S_B(A x, y) = C(S_pair(x, y))
  LinPoly C;
};

namespace detail {

// Projective points of PG(1, q^n) in search order: (1, lambda) by encoding, then (0, 1).
inline std::array<Elem, 2> line_point(const Field& F, std::uint32_t idx) {
  if (idx < F.order()) return {F.one(), Elem{idx}};
  return {F.zero(), F.one()};
}

inline bool point_meets(const Field& F, const std::array<Elem, 2>& p, const std::set<RnVector>& pts) {
  return pts.count(bel::detail::canonical_point(F, {p[0], p[1]})) != 0;
}

}  // namespace detail

inline NormalizeResult normalize(const Field& F, const BelConfig& B) {
  if (B.r != 2) throw DomainError("normalize requires r = 2");
  if (!bel::is_bel(F, B)) throw DomainError("normalize: not a BEL-configuration");
  NormalizeResult res;
  const Elem z = F.zero(), o = F.one();
  BelConfig moved = B;
  if (lp::is_invertible(F, B.f[0]) && lp::is_invertible(F, B.g[0])) {
    res.move = {o, z, z, o};
  } else {
    std::set<RnVector> pu, pw;
    for (const auto& u : bel::detail::enumerate_U(F, B)) pu.insert(bel::detail::canonical_point(F, u));
    for (const auto& w : bel::detail::enumerate_W(F, B)) pw.insert(bel::detail::canonical_point(F, w));
    bool found = false;
    for (std::uint32_t i = 0; i <= F.order() && !found; ++i) {
      const auto pinf = detail::line_point(F, i);
      if (detail::point_meets(F, pinf, pu)) continue;
      for (std::uint32_t j = 0; j <= F.order(); ++j) {
        if (j == i) continue;
        const auto p0 = detail::line_point(F, j);
        if (detail::point_meets(F, p0, pw)) continue;
        res.move = {p0[0], p0[1], pinf[0], pinf[1]};
        found = true;
        break;
      }
    }
    if (!found) throw NormalizationError("normalize: no pair of Desarguesian lines avoids B(U) and B(W)");
    res.identity_move = false;
    const auto& M = res.move;
    const Elem det = F.sub(F.mul(M[0], M[3]), F.mul(M[1], M[2]));
    const Elem di = F.inv(det);
    const std::vector<Elem> Mv(M.begin(), M.end());
    const std::vector<Elem> Minv = {F.mul(M[3], di), F.neg(F.mul(M[1], di)), F.neg(F.mul(M[2], di)), F.mul(M[0], di)};
    // U' = U M^-1 and W' = W M^-1, i.e. apply_gl with the roles of M and M^-1 exchanged.
    moved = bel::apply_gl(F, B, Minv, Mv);
  }
  const LinPoly f1i = lp::comp_inverse(F, moved.f[0]);
  const LinPoly g1i = lp::comp_inverse(F, moved.g[0]);
  res.pair = {lp::compose(F, moved.f[1], f1i), lp::compose(F, g1i, moved.g[1])};
  res.A = f1i;
  res.C = moved.g[0];
  return res;
}

// ---- the 6 x 4 table ----

inline constexpr std::array<std::string_view, 4> kTableColumns = {"id", "s", "e", "es"};

/// Closed form of cell (row word, column word) as a bilinear map, from the pair (a, b).
inline CubicalMult table_closed_form(const Field& F, const Rank2Pair& P, KnuthWord row, std::string_view col) {
  const LinPoly &a = P.a, &b = P.b;
  const LinPoly ah = lp::adjoint(F, a), bh = lp::adjoint(F, b);
  auto ev = [&](const LinPoly& h, Elem x) { return lp::evaluate(F, h, x); };
  // Forms: inner(u, v): xy + u(v(x) y); dual(u, v): xy + u(x v(y)); split(u, v): xy + u(x) v(y).
  auto inner = [&](const LinPoly& u, const LinPoly& v) {
    return sf::cubical_from_bilinear(F, [&](Elem x, Elem y) { return F.add(F.mul(x, y), ev(u, F.mul(ev(v, x), y))); });
  };
  auto dual = [&](const LinPoly& u, const LinPoly& v) {
    return sf::cubical_from_bilinear(F, [&](Elem x, Elem y) { return F.add(F.mul(x, y), ev(u, F.mul(x, ev(v, y)))); });
  };
  auto split = [&](const LinPoly& u, const LinPoly& v) {
    return sf::cubical_from_bilinear(F, [&](Elem x, Elem y) { return F.add(F.mul(x, y), F.mul(ev(u, x), ev(v, y))); });
  };
  const int c = static_cast<int>(std::find(kTableColumns.begin(), kTableColumns.end(), col) - kTableColumns.begin());
  if (c >= 4) throw ParseError("unknown table column '" + std::string(col) + "'");
  switch (row) {
    case KnuthWord::id: {
      const LinPoly* u[] = {&b, &a, &b, &ah};
      const LinPoly* v[] = {&a, &b, &ah, &b};
      return inner(*u[c], *v[c]);
    }
    case KnuthWord::t: {
      const LinPoly* u[] = {&ah, &bh, &a, &bh};
      const LinPoly* v[] = {&bh, &ah, &bh, &a};
      return inner(*u[c], *v[c]);
    }
    case KnuthWord::d: {
      const LinPoly* u[] = {&b, &a, &b, &ah};
      const LinPoly* v[] = {&a, &b, &ah, &b};
      return dual(*u[c], *v[c]);
    }
    case KnuthWord::td: {
      const LinPoly* u[] = {&ah, &bh, &a, &bh};
      const LinPoly* v[] = {&bh, &ah, &bh, &a};
      return dual(*u[c], *v[c]);
    }
    case KnuthWord::dt: {
      const LinPoly* u[] = {&bh, &ah, &bh, &a};
      const LinPoly* v[] = {&a, &b, &ah, &b};
      return split(*u[c], *v[c]);
    }
    case KnuthWord::dtd: {
      const LinPoly* u[] = {&a, &b, &ah, &b};
      const LinPoly* v[] = {&bh, &ah, &bh, &a};
      return split(*u[c], *v[c]);
    }
  }
  throw DomainError("unreachable");
}

/// Cell computed by the definition: the row's Knuth word applied to the column pair.
inline CubicalMult table_cell(const Field& F, const Rank2Pair& P, KnuthWord row, std::string_view col) {
  return sf::knuth_raw(F, cubical(F, apply_word(F, P, col)), row);
}

/// The two cells of the printed table whose printed forms are exchanged:
/// (id, es) is printed as xy + b^(a^(x)y) and (t, s) as xy + a^(b(x)y).
inline CubicalMult table_printed_variant(const Field& F, const Rank2Pair& P, KnuthWord row, std::string_view col) {
  const LinPoly ah = lp::adjoint(F, P.a), bh = lp::adjoint(F, P.b);
  auto inner = [&](const LinPoly& u, const LinPoly& v) {
    return sf::cubical_from_bilinear(F, [&](Elem x, Elem y) {
      return F.add(F.mul(x, y), lp::evaluate(F, u, F.mul(lp::evaluate(F, v, x), y)));
    });
  };
  if (row == KnuthWord::id && col == "es") return inner(bh, ah);
  if (row == KnuthWord::t && col == "s") return inner(ah, P.b);
  return table_closed_form(F, P, row, col);
}

// ---- GTF configurations ----

/// a(x) = c^(1/beta) x^(alpha/beta), b(x) = -x^beta.
inline Rank2Pair gtf_pair(const Field& F, const GtfParams& P) {
  const long long a = P.a, b = P.b;
  return {lp::monomial(F, F.frob(P.c, -b), a - b), lp::monomial(F, F.neg(F.one()), b)};
}

/// f = (1, a), g = (1, b) for the pair above.
inline BelConfig gtf_config(const Field& F, const GtfParams& P) { return to_config(F, gtf_pair(F, P)); }

/// Reads (c, a, b) off an array of the form c_00 = 1, c_ab = -c.
inline std::optional<GtfParams> gtf_from_cubical(const Field& F, const CubicalMult& C) {
  std::vector<std::pair<unsigned, unsigned>> nz;
  for (unsigned i = 0; i < C.n; ++i)
    for (unsigned j = 0; j < C.n; ++j)
      if (C.at(i, j).v != 0 && !(i == 0 && j == 0)) nz.push_back({i, j});
  if (nz.size() > 1) return std::nullopt;
  if (nz.empty()) return GtfParams{F.sub(F.one(), C.at(0, 0)), 0, 0};
  if (C.at(0, 0) != F.one()) return std::nullopt;
  return GtfParams{F.neg(C.at(nz[0].first, nz[0].second)), nz[0].first, nz[0].second};
}

/// The 2 x 4 example table: rows id, t; columns id, s, e, es.
inline GtfParams gtf_table_entry(const Field& F, const GtfParams& P, KnuthWord row, std::string_view col) {
  const long long a = P.a, b = P.b;
  const Elem c = P.c;
  if (row == KnuthWord::id) {
    if (col == "id") return P;
    if (col == "s") return gtf::make(F, F.frob(c, -b), a, a - b);
    if (col == "e") return gtf::make(F, F.frob(c, b - a), 2 * b - a, b);
    if (col == "es") return gtf::make(F, F.frob(c, -a), 2 * b - a, b - a);
  } else if (row == KnuthWord::t) {
    if (col == "id") return gtf::make(F, F.frob(c, -a), -a, b - a);
    if (col == "s") return gtf::make(F, F.frob(c, -a - b), -a, -b);
    if (col == "e") return gtf::make(F, F.frob(c, -b), a - 2 * b, a - b);
    if (col == "es") return gtf::make(F, F.frob(c, -2 * b), a - 2 * b, -b);
  }
  throw DomainError("the GTF table has rows id, t and columns id, s, e, es");
}

// ---- the stabilizer of the hypersurface N(a) = N(b) != 0 ----

/// t with fixed field of beta equal to GF(q^(n/t)).
inline unsigned norm_degree(const Field& F, unsigned b) {
  return F.n() / static_cast<unsigned>(numth::gcd(b, F.n()));
}

inline bool hypersurface_member(const Field& F, Elem a, Elem b, unsigned t) {
  const Elem na = F.rel_norm(a, t);
  return na.v != 0 && na == F.rel_norm(b, t);
}

/// {k : N(k) = 1}; each gives S_{gamma,k} = {(x, k x^gamma)}.
inline std::vector<Elem> norm_one_elements(const Field& F, unsigned t) {
  std::vector<Elem> out;
  for (std::uint32_t k = 1; k < F.order(); ++k)
    if (F.rel_norm(Elem{k}, t) == F.one()) out.push_back(Elem{k});
  return out;
}

inline std::vector<LinPoly> enumerate_S_gamma_k(const Field& F, unsigned gamma, unsigned t) {
  if (t == 0 || F.n() % t != 0) throw DomainError("t must divide n");
  if (gamma % (F.n() / t) != 0) throw DomainError("gamma must fix GF(q^(n/t))");
  std::vector<LinPoly> out;
  for (auto k : norm_one_elements(F, t)) out.push_back(lp::monomial(F, k, gamma));
  return out;
}

inline void require_stab(const Field& F, const StabElement& s, unsigned t) {
  const unsigned step = F.n() / t;
  if (s.gamma >= F.n() || s.delta >= F.n() || s.gamma % step != 0 || s.delta % step != 0)
    throw DomainError("stabilizer automorphisms must fix GF(q^(n/t))");
  const Elem nk = F.rel_norm(s.k, t);
  if (nk.v == 0 || nk != F.rel_norm(s.m, t)) throw DomainError("stabilizer element needs N(k) = N(m) != 0");
}

namespace detail {

// x^(q^e) for a signed exponent index, then multiplicative inverse when inv is set.
inline Elem fpow(const Field& F, Elem x, long long e, bool inv = false) {
  const Elem y = F.frob(x, e);
  return inv ? F.inv(y) : y;
}

}  // namespace detail

/// Exact parameters of the GTF given by U_f^phi and W_g^phi2, where U, W come
/// from gtf_config(P).  U is tracked as {(x, A x^theta)}, W as {(K x^mu, x)}.
inline GtfParams stab_apply(const Field& F, const GtfParams& P, const StabElement& phi, const StabElement& phi2) {
  gtf::require_valid(F, P);
  const unsigned t = norm_degree(F, P.b);
  require_stab(F, phi, t);
  require_stab(F, phi2, t);
  const long long a = P.a, b = P.b;
  Elem A = F.frob(P.c, -b);
  long long theta = a - b;
  Elem K = F.one();
  long long mu = b;
  {
    const long long g = phi.gamma, d = phi.delta;
    if (!phi.swap) {
      A = F.mul(phi.m, F.mul(F.frob(A, d), detail::fpow(F, phi.k, theta + d - g, true)));
      theta = theta + d - g;
    } else {
      const Elem kAg = F.mul(phi.k, F.frob(A, g));
      A = F.mul(phi.m, detail::fpow(F, kAg, d - theta - g, true));
      theta = d - theta - g;
    }
  }
  {
    const long long g = phi2.gamma, d = phi2.delta;
    if (!phi2.swap) {
      K = F.mul(phi2.k, F.mul(F.frob(K, g), detail::fpow(F, phi2.m, mu + g - d, true)));
      mu = mu + g - d;
    } else {
      const Elem mKd = F.mul(phi2.m, F.frob(K, d));
      K = F.mul(phi2.k, detail::fpow(F, mKd, g - mu - d, true));
      mu = g - mu - d;
    }
  }
  return gtf::make(F, F.mul(K, F.frob(A, mu)), theta + mu, mu);
}

/// The printed closed form for two plain elements:
/// c' = (k'/m') (m^beta' / k^alpha') c^(beta' delta / beta).
inline GtfParams stab_apply_printed(const Field& F, const GtfParams& P, const StabElement& phi, const StabElement& phi2) {
  if (phi.swap || phi2.swap) throw DomainError("the printed formula covers plain elements only");
  const long long a = P.a, b = P.b;
  const long long g = phi.gamma, d = phi.delta, g2 = phi2.gamma, d2 = phi2.delta;
  const long long a2 = a + g2 + d - d2 - g, b2 = b + g2 - d2;
  Elem c2 = F.div(phi2.k, phi2.m);
  c2 = F.mul(c2, F.div(F.frob(phi.m, b2), F.frob(phi.k, a2)));
  c2 = F.mul(c2, F.frob(P.c, b2 + d - b));
  return gtf::make(F, c2, a2, b2);
}

/// Direct route: transform U_f and W_g as point sets, then normalize.
inline Rank2Pair stab_oracle(const Field& F, const GtfParams& P, const StabElement& phi, const StabElement& phi2) {
  const BelConfig B = gtf_config(F, P);
  auto mono = [&](Elem c, long long e) { return lp::monomial(F, c, e); };
  BelConfig T;
  T.r = 2;
  // U^phi = {phi(f_1 x, f_2 x)}.
  const LinPoly& src_a = phi.swap ? B.f[1] : B.f[0];
  const LinPoly& src_b = phi.swap ? B.f[0] : B.f[1];
  T.f = {lp::compose(F, mono(phi.k, phi.gamma), src_a), lp::compose(F, mono(phi.m, phi.delta), src_b)};
  // W^phi2 = {w : g(phi2^-1 w) = 0}; the inverse of u -> k u^gamma is v -> (v/k)^(1/gamma).
  const long long g2 = phi2.gamma, d2 = phi2.delta;
  const LinPoly inv_k = mono(F.frob(F.inv(phi2.k), -g2), -g2);
  const LinPoly inv_m = mono(F.frob(F.inv(phi2.m), -d2), -d2);
  if (!phi2.swap)
    T.g = {lp::compose(F, B.g[0], inv_k), lp::compose(F, B.g[1], inv_m)};
  else
    T.g = {lp::compose(F, B.g[1], inv_k), lp::compose(F, B.g[0], inv_m)};
  return normalize(F, T).pair;
}

// ---- rank-two semifields ----

/// S(x, y) = f_1(x) y - (f_2(x) y)^(q^m) with g = (1, -x^(q^m)), n = 2m.
inline BelConfig rank_two_config(const Field& F, const CubicalMult& C) {
  sf::check_shape(F, C);
  const unsigned n = F.n();
  if (n % 2 != 0) throw ValidityError("rank_two_config: n must be even");
  const unsigned m = n / 2;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (j != 0 && j != m && C.at(i, j).v != 0) throw ValidityError("rank_two_config: multiplication is not of rank-two form");
  LinPoly f1 = lp::zero(F), f2 = lp::zero(F);
  for (unsigned i = 0; i < n; ++i) {
    f1.c[i] = C.at(i, 0);
    f2.c[i] = F.frob(F.neg(C.at((i + m) % n, m)), -static_cast<long long>(m));
  }
  return BelConfig{2, {f1, f2}, {lp::identity(F), lp::monomial(F, F.neg(F.one()), m)}};
}

/// b_eps vanishes on W x W for W = {(x^(q^m), x)}.
inline bool e_trivial_check(const Field& F, unsigned m) {
  if (F.n() != 2 * m) throw DomainError("e_trivial_check requires n = 2m");
  for (std::uint32_t x = 0; x < F.order(); ++x) {
    const Elem xm = F.frob(Elem{x}, m);
    for (std::uint32_t y = 0; y < F.order(); ++y)
      if (sf::b_epsilon(F, xm, Elem{x}, F.frob(Elem{y}, m), Elem{y}).v != 0) return false;
  }
  return true;
}

}  // namespace rank2
}  // namespace belsf
