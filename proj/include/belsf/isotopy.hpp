#pragma once

// Isotopy invariants and exhaustive isotopy search.
//
// For an isotopism S2(A x, B y) = C(S1(x, y)), setting y = 1 gives
// C = R2_u A R1_1^-1 with u = B(1); then B(y) is forced by
// R2_{B y} = C R1_y A^-1.  The search enumerates A in GL(n, q) and u, solves
// for C and B, and verifies.

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <vector>

#include "belsf/errors.hpp"
#include "belsf/gf.hpp"
#include "belsf/linpoly.hpp"
#include "belsf/matrix.hpp"
#include "belsf/parallel.hpp"
#include "belsf/semifield.hpp"

namespace belsf {

struct Isotopism {
  LinPoly A, B, C;
  friend bool operator==(const Isotopism&, const Isotopism&) = default;
};

struct IsotopyInvariants {
  std::uint32_t q = 0;
  unsigned n = 0;
  sf::Nuclei nuclei;
  friend bool operator==(const IsotopyInvariants&, const IsotopyInvariants&) = default;
};

struct IsotopySearchOptions {
  std::uint64_t budget = 27;  // largest q^n searched
  bool prune_by_invariants = true;
  unsigned jobs = 1;
};

namespace iso {

inline IsotopyInvariants invariants(const Field& F, const CubicalMult& C) {
  return IsotopyInvariants{F.q(), F.n(), sf::nuclei(F, C)};
}

/// S2(A x, B y) = C(S1(x, y)) for every x, y.
inline bool verify(const Field& F, const CubicalMult& S1, const CubicalMult& S2, const Isotopism& T) {
  if (!lp::is_invertible(F, T.A) || !lp::is_invertible(F, T.B) || !lp::is_invertible(F, T.C)) return false;
  std::vector<Elem> Ax(F.order()), By(F.order());
  for (std::uint32_t v = 0; v < F.order(); ++v) {
    Ax[v] = lp::evaluate(F, T.A, Elem{v});
    By[v] = lp::evaluate(F, T.B, Elem{v});
  }
  for (std::uint32_t x = 0; x < F.order(); ++x) {
    const LinPoly L2 = sf::left_mult(F, S2, Ax[x]);
    const LinPoly L1 = sf::left_mult(F, S1, Elem{x});
    for (std::uint32_t y = 0; y < F.order(); ++y)
      if (lp::evaluate(F, L2, By[y]) != lp::evaluate(F, T.C, lp::evaluate(F, L1, Elem{y}))) return false;
  }
  return true;
}

namespace detail {

struct SearchTables {
  std::vector<FqMatrix> R2;   // R2_w for every w
  FqMatrix R1_1_inv;
  std::vector<FqMatrix> T;    // R1_1^-1 R1_{X^j}
  FqMatrix L2_1_inv;
};

inline bool in_span(const Field& F, const std::vector<std::vector<std::uint32_t>>& cols, const std::vector<std::uint32_t>& v) {
  FqMatrix M(F.n(), cols.size() + 1);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (unsigned i = 0; i < F.n(); ++i) M(i, c) = cols[c][i];
  for (unsigned i = 0; i < F.n(); ++i) M(i, cols.size()) = v[i];
  return M.rank(F) == cols.size();
}

/// Tries every u for a fixed A; returns (u, C, B) on success.
inline std::optional<Isotopism> try_A(const Field& F, const SearchTables& tab, const FqMatrix& A) {
  const unsigned n = F.n();
  const auto Ainv = A.inverse(F);
  if (!Ainv) return std::nullopt;
  std::vector<FqMatrix> ATAi(n);
  for (unsigned j = 0; j < n; ++j) ATAi[j] = A.multiply(F, tab.T[j]).multiply(F, *Ainv);
  const FqMatrix AR = A.multiply(F, tab.R1_1_inv);
  const auto one = F.coords(F.one());
  for (std::uint32_t u = 1; u < F.order(); ++u) {
    const FqMatrix& Ru = tab.R2[u];
    std::vector<Elem> bvals(n);
    bool ok = true;
    for (unsigned j = 0; j < n && ok; ++j) {
      const FqMatrix Mj = Ru.multiply(F, ATAi[j]);
      const auto w = F.from_coords(tab.L2_1_inv.apply(F, Mj.apply(F, one)));
      if (tab.R2[w.v] != Mj) ok = false;
      bvals[j] = w;
    }
    if (!ok) continue;
    return Isotopism{lp::from_matrix(F, A), lp::from_values(F, bvals), lp::from_matrix(F, Ru.multiply(F, AR))};
  }
  return std::nullopt;
}

/// Depth-first enumeration of GL(n, q) by column images in encoding order,
/// restricted to a given first column.
template <class Visit>
bool enumerate_gl(const Field& F, std::vector<std::vector<std::uint32_t>>& cols, Visit&& visit) {
  const unsigned n = F.n();
  if (cols.size() == n) {
    FqMatrix A(n, n);
    for (unsigned c = 0; c < n; ++c)
      for (unsigned i = 0; i < n; ++i) A(i, c) = cols[c][i];
    return visit(A);
  }
  for (std::uint32_t v = 1; v < F.order(); ++v) {
    auto col = F.coords(Elem{v});
    if (in_span(F, cols, col)) continue;
    cols.push_back(std::move(col));
    if (enumerate_gl(F, cols, visit)) return true;
    cols.pop_back();
  }
  return false;
}

}  // namespace detail

/// Complete search; the first witness in (A, u) enumeration order is returned.
inline std::optional<Isotopism> isotopic_bruteforce(const Field& F, const CubicalMult& S1, const CubicalMult& S2,
                                                    const IsotopySearchOptions& opt = {}) {
  if (F.order() > opt.budget)
    throw BudgetError("isotopy search: q^n = " + std::to_string(F.order()) + " exceeds budget " + std::to_string(opt.budget));
  if (!sf::is_presemifield(F, S1) || !sf::is_presemifield(F, S2)) throw ValidityError("isotopy search: inputs must be presemifields");
  if (opt.prune_by_invariants && !(invariants(F, S1) == invariants(F, S2))) return std::nullopt;

  const unsigned n = F.n();
  detail::SearchTables tab;
  for (std::uint32_t w = 0; w < F.order(); ++w) tab.R2.push_back(lp::to_matrix(F, sf::right_mult(F, S2, Elem{w})));
  tab.R1_1_inv = *lp::to_matrix(F, sf::right_mult(F, S1, F.one())).inverse(F);
  for (unsigned j = 0; j < n; ++j)
    tab.T.push_back(tab.R1_1_inv.multiply(F, lp::to_matrix(F, sf::right_mult(F, S1, F.basis(j)))));
  tab.L2_1_inv = *lp::to_matrix(F, sf::left_mult(F, S2, F.one())).inverse(F);

  // Partition by the image of the first basis vector.
  const std::size_t parts = F.order() - 1;
  std::vector<std::optional<Isotopism>> found(parts);
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  parallel_blocks(parts, opt.jobs, [&](unsigned, std::size_t b, std::size_t e) {
    for (std::size_t p = b; p < e; ++p) {
      if (p > best.load()) return;
      std::vector<std::vector<std::uint32_t>> cols{F.coords(Elem{static_cast<std::uint32_t>(p + 1)})};
      detail::enumerate_gl(F, cols, [&](const FqMatrix& A) {
        if (p > best.load()) return true;
        if (auto T = detail::try_A(F, tab, A)) {
          found[p] = std::move(T);
          std::size_t cur = best.load();
          while (p < cur && !best.compare_exchange_weak(cur, p)) {
          }
          return true;
        }
        return false;
      });
      if (found[p]) return;
    }
  });
  for (auto& f : found)
    if (f) {
      if (!verify(F, S1, S2, *f)) throw Error("isotopy search produced an isotopism that fails verification");
      return f;
    }
  return std::nullopt;
}

}  // namespace iso
}  // namespace belsf
