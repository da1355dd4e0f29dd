#pragma once

// The acceptance suite: twelve exact checks with fixed parameters and seeds.
// Shared by the acceptance test binary and `belsf verify all`.

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "belsf/bel.hpp"
#include "belsf/gf.hpp"
#include "belsf/gtf.hpp"
#include "belsf/isotopy.hpp"
#include "belsf/random.hpp"
#include "belsf/rank2.hpp"
#include "belsf/semifield.hpp"

namespace belsf::verify {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome(std::uint64_t seed, unsigned jobs)> run;
};

struct Result {
  int id = 0;
  std::string name;
  bool checks_ok = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
  bool pass() const { return checks_ok && seconds < limit_seconds; }
};

namespace detail {

class Tally {
 public:
  void check(bool cond, const std::string& what) {
    ++run_;
    if (!cond) {
      ++failed_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  std::size_t run() const { return run_; }
  std::size_t failed() const { return failed_; }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << run_ - failed_ << "/" << run_ << " checks";
    if (!summary.empty()) s << "; " << summary;
    if (failed_ != 0) s << "; first failure: " << first_failure_;
    return {failed_ == 0, s.str()};
  }

 private:
  std::size_t run_ = 0, failed_ = 0;
  std::string first_failure_;
};

/// A non-square generator-power of GF(27)* is a valid c for (alpha, beta) = (q, q^2).
inline Elem nonsquare(const Field& F) { return F.generator(); }

inline bool same_mult_pointwise(const Field& F, const std::function<Elem(Elem, Elem)>& a, const std::function<Elem(Elem, Elem)>& b) {
  for (std::uint32_t x = 0; x < F.order(); ++x)
    for (std::uint32_t y = 0; y < F.order(); ++y)
      if (a(Elem{x}, Elem{y}) != b(Elem{x}, Elem{y})) return false;
  return true;
}

inline std::string gtf_str(const GtfParams& P) {
  return "(" + std::to_string(P.c.v) + "," + std::to_string(P.a) + "," + std::to_string(P.b) + ")";
}

}  // namespace detail

// 1
inline Outcome knuth_s3(std::uint64_t seed, unsigned) {
  detail::Tally T;
  using K = KnuthWord;
  for (auto [q, n] : {std::pair{2, 3}, std::pair{3, 2}}) {
    const auto Fp = Field::make(q, n);
    const Field& F = *Fp;
    Sampler S(seed);
    for (int it = 0; it < 100; ++it) {
      const CubicalMult C = S.presemifield(F);
      auto k = [&](const CubicalMult& M, K w) { return sf::knuth_raw(F, M, w); };
      const std::string tag = "q=" + std::to_string(q) + " sample " + std::to_string(it);
      T.check(k(k(C, K::t), K::t) == C, "t^2 = id, " + tag);
      T.check(k(k(C, K::d), K::d) == C, "d^2 = id, " + tag);
      T.check(k(k(k(C, K::t), K::d), K::t) == k(k(k(C, K::d), K::t), K::d), "tdt = dtd, " + tag);
      T.check(k(k(C, K::t), K::d) == k(C, K::td) && k(k(C, K::d), K::t) == k(C, K::dt) &&
                  k(k(k(C, K::d), K::t), K::d) == k(C, K::dtd),
              "table rows agree with composites, " + tag);
      const CubicalMult Ct = sf::knuth(F, C, K::t);
      bool adj = true;
      for (std::uint32_t y = 0; y < F.order() && adj; ++y) {
        const LinPoly Rh = lp::adjoint(F, sf::right_mult(F, C, Elem{y}));
        for (std::uint32_t x = 0; x < F.order(); ++x)
          if (sf::mult(F, Ct, Elem{x}, Elem{y}) != lp::evaluate(F, Rh, Elem{x})) {
            adj = false;
            break;
          }
      }
      T.check(adj, "S^t(x,y) = adjoint(R_y)(x), " + tag);
    }
  }
  return T.outcome("100 presemifields at each of (q,n) = (2,3), (3,2)");
}

// 2
inline Outcome gtf_table(std::uint64_t, unsigned) {
  detail::Tally T;
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const Elem c = detail::nonsquare(F);
  const GtfParams P{c, 1, 2};
  T.check(gtf::valid(F, P), "c is valid");
  auto inv = [&](long long k) { return F.frob(c, k); };
  // (word, expected): alpha = q (a = 1), beta = q^2 (b = 2), exponents mod 3.
  const std::vector<std::pair<KnuthWord, GtfParams>> expected = {
      {KnuthWord::id, {c, 1, 2}},         // (c, alpha, beta)
      {KnuthWord::t, {inv(-1), 2, 1}},    // (c^(1/alpha), 1/alpha, beta/alpha)
      {KnuthWord::d, {c, 2, 1}},          // (c, beta, alpha)
      {KnuthWord::td, {inv(-1), 1, 2}},   // (c^(1/alpha), beta/alpha, 1/alpha)
      {KnuthWord::dt, {inv(-2), 1, 2}},   // (c^(1/beta), 1/beta, alpha/beta)
      {KnuthWord::dtd, {inv(-2), 2, 1}},  // (c^(1/beta), alpha/beta, 1/beta)
  };
  const CubicalMult C = gtf::to_cubical(F, P);
  for (const auto& [w, E] : expected) {
    const GtfParams got = gtf::knuth(F, P, w);
    T.check(got == E, std::string(to_string(w)) + ": got " + detail::gtf_str(got) + ", expected " + detail::gtf_str(E));
    T.check(gtf::to_cubical(F, got) == sf::knuth(F, C, w), std::string(to_string(w)) + ": cubical route differs");
  }
  return T.outcome("GF(27), c = " + std::to_string(c.v) + ", six words");
}

// 3
inline Outcome bel_equivalences(std::uint64_t seed, unsigned) {
  detail::Tally T;
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  Sampler S(seed);
  int bel_count = 0;
  for (int it = 0; it < 200; ++it) {
    const unsigned r = 2 + it % 2;
    const BelConfig B = (it % 4 < 2) ? S.config_with_dims(F, r) : S.bel_config(F, r);
    const auto props = bel::properties(F, B);
    const bool via_cubical = sf::is_presemifield(F, bel::to_cubical(F, B));
    const std::string tag = "sample " + std::to_string(it) + " r=" + std::to_string(r);
    T.check(props.all_agree(), "five conditions disagree, " + tag);
    T.check(bel::is_bel(F, B) == via_cubical && via_cubical == props.zero_divisor_free, "is_bel vs cubical route, " + tag);
    bel_count += props.zero_divisor_free ? 1 : 0;
  }
  return T.outcome("200 tuples at q=2, n=3, r in {2,3}; " + std::to_string(bel_count) + " BEL, " + std::to_string(200 - bel_count) + " not");
}

// 4
inline Outcome explicit_mult(std::uint64_t, unsigned) {
  detail::Tally T;
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const GtfParams P{detail::nonsquare(F), 1, 2};
  const BelConfig B = rank2::gtf_config(F, P);
  std::size_t agree = 0;
  for (std::uint32_t x = 0; x < F.order(); ++x)
    for (std::uint32_t y = 0; y < F.order(); ++y)
      agree += bel::mult(F, B, Elem{x}, Elem{y}) == gtf::mult(F, P, Elem{x}, Elem{y});
  T.check(agree == 729, std::to_string(agree) + "/729 pairs agree");
  return T.outcome("f=(1, c^(1/beta) x^(alpha/beta)), g=(1, -x^beta) over GF(27), " + std::to_string(agree) + "/729 pairs");
}

// 5
inline Outcome spread_construction(std::uint64_t seed, unsigned) {
  detail::Tally T;
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  Sampler S(seed);
  for (int it = 0; it < 20; ++it) {
    const BelConfig B = S.bel_config(F, 2 + it % 2);
    const SemifieldSpread Sp = bel::spread(F, B);
    const std::string tag = "sample " + std::to_string(it);
    T.check(Sp.graphs.size() + (Sp.has_infinity ? 1 : 0) == F.order() + 1u, "member count, " + tag);
    T.check(sf::is_spread(F, Sp), "exact cover, " + tag);
    T.check(Sp == sf::spread_of(F, sf::knuth(F, bel::to_cubical(F, B), KnuthWord::d)), "cubical route, " + tag);
  }
  return T.outcome("20 BEL-configurations at q=2, n=3");
}

// 6
inline Outcome r_reduction(std::uint64_t seed, unsigned) {
  detail::Tally T;
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  Sampler S(seed);
  for (int it = 0; it < 20; ++it) {
    // W contains B(v) for v = (v1, v2, 1) by construction of g3.
    const BelConfig B2 = S.bel_config(F, 2);
    const Elem v1 = S.elem(F), v2 = S.elem(F);
    BelConfig B{3, {B2.f[0], B2.f[1], S.linpoly(F)}, {B2.g[0], B2.g[1], {}}};
    B.g[2] = lp::neg(F, lp::add(F, lp::precompose_scalar(F, B.g[0], v1), lp::precompose_scalar(F, B.g[1], v2)));
    const std::string tag = "sample " + std::to_string(it);
    const auto v = bel::find_spread_element_in_W(F, B);
    T.check(v.has_value(), "spread element found, " + tag);
    if (!v) continue;
    const BelConfig R = bel::reduce_r(F, B);
    T.check(R.r == 2, "r decreases, " + tag);
    bool same = true;
    for (std::uint32_t x = 0; x < F.order(); ++x)
      for (std::uint32_t y = 0; y < F.order(); ++y)
        if (bel::mult(F, B, Elem{x}, Elem{y}) != bel::mult(F, R, Elem{x}, Elem{y})) same = false;
    T.check(same, "multiplication preserved, " + tag);
  }
  return T.outcome("20 reducible r=3 configurations at q=2, n=3");
}

// 7
inline Outcome perp_transpose(std::uint64_t seed, unsigned) {
  detail::Tally T;
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  Sampler S(seed);
  for (int it = 0; it < 100; ++it) {
    const BelConfig B = S.bel_config(F, 2 + it % 2);
    const BelConfig Bt = bel::perp_transpose(F, B);
    const std::string tag = "sample " + std::to_string(it);
    T.check(bel::to_cubical(F, Bt) == sf::knuth(F, bel::to_cubical(F, B), KnuthWord::t), "cubical of transpose, " + tag);
    T.check(bel::perp_transpose(F, Bt) == B, "involution, " + tag);
    T.check(bel::is_bel(F, Bt), "BEL preserved, " + tag);
  }
  return T.outcome("100 BEL-configurations at q=2, n=3, r in {2,3}");
}

// 8
inline Outcome symplectic(std::uint64_t seed, unsigned) {
  detail::Tally T;
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  Sampler S(seed);
  // Commutative presemifields: the field and x y^q + x^q y, moved by C(S(A x, A y)).
  CubicalMult albert = sf::zero(F);
  albert.at(0, 1) = albert.at(1, 0) = F.one();
  const CubicalMult bases[] = {sf::field_cubical(F), albert};
  int presemifields = 0;
  for (int it = 0; it < 50; ++it) {
    CubicalMult C;
    if (it % 2 == 0) {
      C = S.symmetric_cubical(F);
    } else {
      const CubicalMult& base = bases[(it / 2) % 2];
      const LinPoly A = S.invertible_linpoly(F), Cm = S.invertible_linpoly(F);
      C = sf::cubical_from_bilinear(F, [&](Elem x, Elem y) {
        return lp::evaluate(F, Cm, sf::mult(F, base, lp::evaluate(F, A, x), lp::evaluate(F, A, y)));
      });
    }
    const std::string tag = "sample " + std::to_string(it);
    const auto res = bel::symplectic_config(F, C);
    CubicalMult R = sf::zero(F);
    for (const auto& v : res.vectors)
      for (unsigned i = 0; i < F.n(); ++i)
        for (unsigned j = 0; j < F.n(); ++j) R.at(i, j) = F.add(R.at(i, j), F.mul(v[i], v[j]));
    T.check(R == C, "C = sum v v^T, " + tag);
    T.check(bel::to_cubical(F, res.config) == sf::knuth_raw(F, C, KnuthWord::dtd), "S_{f,f^} is the dtd-preimage, " + tag);
    if (sf::is_presemifield(F, C)) {
      ++presemifields;
      bool adj = true;
      for (unsigned k = 0; k < res.config.r; ++k) adj = adj && res.config.g[k] == lp::adjoint(F, res.config.f[k]);
      T.check(adj, "g = f^, " + tag);
      T.check(bel::is_bel(F, res.config), "BEL, " + tag);
    }
  }
  // Characteristic-2 alternating witness over GF(2): [[0,1],[1,0]].
  const auto Gp = Field::make(2, 2);
  const Field& G = *Gp;
  CubicalMult W = sf::zero(G);
  W.at(0, 1) = W.at(1, 0) = G.one();
  const auto wres = bel::symplectic_config(G, W);
  T.check(wres.vectors.size() == 3, "alternating witness uses 3 rank-one terms");
  return T.outcome("50 symmetric arrays at q=3, n=3 (" + std::to_string(presemifields) +
                   " presemifields) and the alternating witness (r = " + std::to_string(wres.vectors.size()) + ")");
}

// 9
inline Outcome order8(std::uint64_t seed, unsigned) {
  detail::Tally T;
  {
    const auto Fp = Field::make(2, 3);
    const Field& F = *Fp;
    Sampler S(seed);
    for (int it = 0; it < 100; ++it) {
      const Rank2Pair P = S.bel_pair(F);
      auto w = [&](std::string_view word) { return rank2::apply_word(F, P, word); };
      const std::string tag = "sample " + std::to_string(it);
      T.check(w("ss") == P && w("ee") == P && w("tt") == P, "involutions, " + tag);
      T.check(w("ese") == w("t"), "ese = t, " + tag);
      T.check(w("st") == w("ts"), "st = ts, " + tag);
      T.check(w("sesesese") == P, "(se)^4 = id, " + tag);
      for (const auto& e : rank2::orbit8(F, P)) T.check(rank2::bel_ok(F, e.pair), "BEL preserved by " + e.word + ", " + tag);
      for (auto row : kAllKnuthWords)
        for (auto col : rank2::kTableColumns)
          T.check(rank2::table_cell(F, P, row, col) == rank2::table_closed_form(F, P, row, col),
                  "cell " + std::string(to_string(row)) + "/" + std::string(col) + ", " + tag);
    }
  }
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const GtfParams G{detail::nonsquare(F), 1, 2};
  const Rank2Pair P = rank2::gtf_pair(F, G);
  T.check(rank2::distinct_pairs(rank2::orbit8(F, P)) == 8, "8 distinct pairs in the GTF orbit");
  for (auto row : {KnuthWord::id, KnuthWord::t})
    for (auto col : rank2::kTableColumns) {
      const auto got = rank2::gtf_from_cubical(F, rank2::table_cell(F, P, row, col));
      const GtfParams want = rank2::gtf_table_entry(F, G, row, col);
      T.check(got && *got == want, "GTF table " + std::string(to_string(row)) + "/" + std::string(col));
    }
  std::vector<std::string> printed_mismatch;
  for (auto row : kAllKnuthWords)
    for (auto col : rank2::kTableColumns) {
      const CubicalMult cell = rank2::table_cell(F, P, row, col);
      T.check(cell == rank2::table_closed_form(F, P, row, col), "GF(27) cell " + std::string(to_string(row)) + "/" + std::string(col));
      if (cell != rank2::table_printed_variant(F, P, row, col))
        printed_mismatch.push_back(std::string(to_string(row)) + "/" + std::string(col));
    }
  std::string note = "as-printed forms differ in";
  for (const auto& m : printed_mismatch) note += " " + m;
  if (printed_mismatch.empty()) note = "all as-printed forms match";
  return T.outcome("100 random pairs at q=2, n=3; GTF (c,q,q^2) over GF(27); " + note);
}

// 10
inline Outcome stabilizer(std::uint64_t seed, unsigned) {
  detail::Tally T;
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const GtfParams P{detail::nonsquare(F), 1, 2};
  const unsigned t = rank2::norm_degree(F, P.b);
  const StabElement id{};
  for (unsigned g = 0; g < F.n(); ++g) {
    const StabElement phi{false, F.one(), F.one(), 0, g};
    const GtfParams got = rank2::stab_apply(F, P, phi, id);
    T.check(got == gtf::make(F, F.frob(P.c, g), P.a + g, P.b), "phi_{1,1,1,gamma} with gamma = q^" + std::to_string(g));
  }
  Sampler S(seed);
  auto random_elem = [&](bool allow_swap) {
    StabElement s;
    s.swap = allow_swap && S.below(2) == 1;
    s.gamma = static_cast<unsigned>(S.below(F.n()));
    s.delta = static_cast<unsigned>(S.below(F.n()));
    for (;;) {
      s.k = S.nonzero(F);
      s.m = S.nonzero(F);
      if (F.rel_norm(s.k, t) == F.rel_norm(s.m, t)) return s;
    }
  };
  int printed_isotopic = 0, printed_exact = 0, plain_pairs = 0;
  for (int it = 0; it < 50; ++it) {
    const StabElement phi = random_elem(true), phi2 = random_elem(true);
    const GtfParams cp = rank2::stab_apply(F, P, phi, phi2);
    const Rank2Pair direct = rank2::stab_oracle(F, P, phi, phi2);
    const std::string tag = "sample " + std::to_string(it);
    T.check(detail::same_mult_pointwise(
                F, [&](Elem x, Elem y) { return rank2::mult(F, direct, x, y); },
                [&](Elem x, Elem y) { return gtf::mult(F, cp, x, y); }),
            "closed form vs transformed subspaces, " + tag);
    T.check(gtf::valid(F, cp), "BEL preserved, " + tag);
    if (!phi.swap && !phi2.swap) {
      ++plain_pairs;
      const GtfParams pub = rank2::stab_apply_printed(F, P, phi, phi2);
      printed_exact += pub == cp;
      printed_isotopic += gtf::valid(F, pub) && gtf::isotopic(F, pub, cp);
    }
  }
  for (int it = 0; it < 20; ++it) {
    const StabElement phi{false, F.one(), F.one(), static_cast<unsigned>(S.below(F.n())), 0};
    const StabElement phi2{false, F.one(), F.one(), static_cast<unsigned>(S.below(F.n())), 0};
    const GtfParams cp = rank2::stab_apply(F, P, phi, phi2);
    T.check(F.rel_norm(cp.c, t) == F.rel_norm(P.c, t), "N(c') = N(c), sample " + std::to_string(it));
  }
  return T.outcome("50 random (phi, phi') over GF(27), 729 pairs each; printed c' formula exact on " +
                   std::to_string(printed_exact) + "/" + std::to_string(plain_pairs) + " plain pairs, isotopic on " +
                   std::to_string(printed_isotopic) + "/" + std::to_string(plain_pairs));
}

// 11
inline Outcome isotopy_cross(std::uint64_t, unsigned jobs) {
  detail::Tally T;
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const Elem c = detail::nonsquare(F);
  auto P = [&](std::uint64_t k, unsigned a, unsigned b) { return GtfParams{F.pow(c, k), a, b}; };
  const std::vector<std::pair<GtfParams, GtfParams>> pairs = {
      {P(1, 1, 2), P(1, 1, 2)}, {P(1, 1, 2), P(3, 1, 2)}, {P(1, 1, 2), P(5, 1, 2)}, {P(1, 1, 2), P(1, 2, 1)},
      {P(7, 2, 1), P(1, 1, 2)}, {P(1, 1, 0), P(1, 0, 1)}, {P(1, 1, 2), P(1, 1, 0)}, {P(1, 1, 2), P(1, 0, 2)},
      {P(1, 2, 1), P(1, 1, 1)}, {P(3, 1, 2), P(5, 2, 0)},
  };
  IsotopySearchOptions opt;
  opt.prune_by_invariants = false;
  opt.jobs = jobs;
  int iso_count = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [A, B] = pairs[i];
    const bool closed = gtf::isotopic(F, A, B);
    const CubicalMult CA = gtf::to_cubical(F, A), CB = gtf::to_cubical(F, B);
    const auto w = iso::isotopic_bruteforce(F, CA, CB, opt);
    const std::string tag = detail::gtf_str(A) + " vs " + detail::gtf_str(B);
    T.check(closed == w.has_value(), "closed form and search disagree, " + tag);
    if (w) T.check(iso::verify(F, CA, CB, *w), "witness re-verification, " + tag);
    iso_count += closed ? 1 : 0;
  }
  return T.outcome("10 GTF pairs over GF(27), " + std::to_string(iso_count) + " isotopic, " +
                   std::to_string(10 - iso_count) + " not; complete search without invariant pruning");
}

// 12
inline Outcome e_trivial(std::uint64_t, unsigned) {
  detail::Tally T;
  for (auto [q, n, m] : {std::tuple{2, 2, 1u}, std::tuple{2, 4, 2u}, std::tuple{3, 2, 1u}}) {
    const auto Fp = Field::make(q, n);
    T.check(rank2::e_trivial_check(*Fp, m), "W^eps = W at q=" + std::to_string(q) + ", n=" + std::to_string(n));
  }
  return T.outcome("(q,n,m) in {(2,2,1), (2,4,2), (3,2,1)}");
}

inline std::vector<Criterion> criteria() {
  return {
      {1, "knuth-s3", 10, knuth_s3},
      {2, "gtf-knuth-table", 1, gtf_table},
      {3, "bel-equivalences", 30, bel_equivalences},
      {4, "explicit-multiplication", 1, explicit_mult},
      {5, "spread-construction", 10, spread_construction},
      {6, "r-reduction", 5, r_reduction},
      {7, "perp-transpose", 10, perp_transpose},
      {8, "symplectic", 10, symplectic},
      {9, "order-8-group", 30, order8},
      {10, "stabilizer", 60, stabilizer},
      {11, "isotopy-cross-validation", 1800, isotopy_cross},
      {12, "e-triviality", 5, e_trivial},
  };
}

inline Result run(const Criterion& c, std::uint64_t seed, unsigned jobs) {
  Result r;
  r.id = c.id;
  r.name = c.name;
  r.limit_seconds = c.limit_seconds;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = c.run(seed + static_cast<std::uint64_t>(c.id), jobs);
    r.checks_ok = o.ok;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.checks_ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// "PASS  3 bel-equivalences: <detail>"; timing is reported separately.
inline std::string format_line(const Result& r) {
  std::ostringstream s;
  s << (r.pass() ? "PASS" : "FAIL") << " " << (r.id < 10 ? " " : "") << r.id << " " << r.name << ": " << r.detail;
  return s.str();
}

}  // namespace belsf::verify
