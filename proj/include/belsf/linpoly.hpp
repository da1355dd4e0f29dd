#pragma once

// q-linearized polynomials f(x) = sum_i f_i x^(q^i), i < n, i.e. the
// GF(q)-linear endomorphisms of GF(q^n).

#include <string>
#include <vector>

#include "belsf/errors.hpp"
#include "belsf/gf.hpp"
#include "belsf/matrix.hpp"

namespace belsf {

struct LinPoly {
  std::vector<Elem> c;
  friend bool operator==(const LinPoly&, const LinPoly&) = default;
  friend auto operator<=>(const LinPoly&, const LinPoly&) = default;
};

namespace lp {

inline LinPoly zero(const Field& F) { return LinPoly{std::vector<Elem>(F.n(), F.zero())}; }

/// c * x^(q^k)
inline LinPoly monomial(const Field& F, Elem coef, long long k) {
  LinPoly f = zero(F);
  f.c[F.aut(k).k] = coef;
  return f;
}

inline LinPoly scalar(const Field& F, Elem coef) { return monomial(F, coef, 0); }
inline LinPoly identity(const Field& F) { return scalar(F, F.one()); }
inline LinPoly trace_map(const Field& F) { return LinPoly{std::vector<Elem>(F.n(), F.one())}; }

inline bool is_zero(const LinPoly& f) {
  for (auto x : f.c)
    if (x.v != 0) return false;
  return true;
}

inline void check_len(const Field& F, const LinPoly& f) {
  if (f.c.size() != F.n()) throw DomainError("linearized polynomial has " + std::to_string(f.c.size()) + " coefficients, expected " + std::to_string(F.n()));
}

inline Elem evaluate(const Field& F, const LinPoly& f, Elem x) {
  Elem s = F.zero();
  if (x.v == 0) return s;
  for (unsigned i = 0; i < F.n(); ++i)
    if (f.c[i].v != 0) s = F.add(s, F.mul(f.c[i], F.frob(x, Aut{i})));
  return s;
}

inline LinPoly add(const Field& F, const LinPoly& f, const LinPoly& g) {
  LinPoly h = zero(F);
  for (unsigned i = 0; i < F.n(); ++i) h.c[i] = F.add(f.c[i], g.c[i]);
  return h;
}

inline LinPoly sub(const Field& F, const LinPoly& f, const LinPoly& g) {
  LinPoly h = zero(F);
  for (unsigned i = 0; i < F.n(); ++i) h.c[i] = F.sub(f.c[i], g.c[i]);
  return h;
}

inline LinPoly neg(const Field& F, const LinPoly& f) { return sub(F, zero(F), f); }

/// x -> s * f(x)
inline LinPoly scale(const Field& F, Elem s, const LinPoly& f) {
  LinPoly h = zero(F);
  for (unsigned i = 0; i < F.n(); ++i) h.c[i] = F.mul(s, f.c[i]);
  return h;
}

/// f o g
inline LinPoly compose(const Field& F, const LinPoly& f, const LinPoly& g) {
  const unsigned n = F.n();
  LinPoly h = zero(F);
  for (unsigned i = 0; i < n; ++i) {
    if (f.c[i].v == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (g.c[j].v == 0) continue;
      const unsigned k = (i + j) % n;
      h.c[k] = F.add(h.c[k], F.mul(f.c[i], F.frob(g.c[j], Aut{i})));
    }
  }
  return h;
}

/// x -> f(s x)
inline LinPoly precompose_scalar(const Field& F, const LinPoly& f, Elem s) { return compose(F, f, scalar(F, s)); }

/// The trace adjoint: tr(f(x) y) = tr(x f^(y)).
inline LinPoly adjoint(const Field& F, const LinPoly& f) {
  const unsigned n = F.n();
  LinPoly h = zero(F);
  for (unsigned i = 0; i < n; ++i) h.c[i] = F.frob(f.c[(n - i) % n], Aut{i});
  return h;
}

/// Column j holds the GF(q)-coordinates of f(X^j).
inline FqMatrix to_matrix(const Field& F, const LinPoly& f) {
  const unsigned n = F.n();
  FqMatrix m(n, n);
  for (unsigned j = 0; j < n; ++j) {
    const auto col = F.coords(evaluate(F, f, F.basis(j)));
    for (unsigned i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

/// The unique linearized polynomial taking X^j to values[j].
inline LinPoly from_values(const Field& F, const std::vector<Elem>& values) {
  const unsigned n = F.n();
  LinPoly h = zero(F);
  for (unsigned j = 0; j < n; ++j) {
    if (values[j].v == 0) continue;
    for (unsigned i = 0; i < n; ++i) h.c[i] = F.add(h.c[i], F.mul(values[j], F.frob(F.dual_basis(j), Aut{i})));
  }
  return h;
}

inline LinPoly from_matrix(const Field& F, const FqMatrix& m) {
  const unsigned n = F.n();
  std::vector<Elem> vals(n);
  for (unsigned j = 0; j < n; ++j) {
    std::vector<std::uint32_t> col(n);
    for (unsigned i = 0; i < n; ++i) col[i] = m(i, j);
    vals[j] = F.from_coords(col);
  }
  return from_values(F, vals);
}

inline std::size_t rank(const Field& F, const LinPoly& f) { return to_matrix(F, f).rank(F); }

inline bool is_invertible(const Field& F, const LinPoly& f) { return rank(F, f) == F.n(); }

inline LinPoly comp_inverse(const Field& F, const LinPoly& f) {
  auto inv = to_matrix(F, f).inverse(F);
  if (!inv) throw SingularError("linearized polynomial is not invertible");
  return from_matrix(F, *inv);
}

/// Kernel basis as field elements, in the reduced echelon order of kernel_basis.
inline std::vector<Elem> kernel(const Field& F, const LinPoly& f) {
  std::vector<Elem> out;
  for (const auto& v : to_matrix(F, f).kernel_basis(F)) out.push_back(F.from_coords(v));
  return out;
}

}  // namespace lp
}  // namespace belsf
