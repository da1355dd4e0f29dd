#include <catch_amalgamated.hpp>

#include <algorithm>

#include "belsf/gtf.hpp"
#include "belsf/isotopy.hpp"
#include "belsf/random.hpp"

using namespace belsf;

TEST_CASE("validity", "[gtf]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  CHECK_FALSE(gtf::valid(F, {F.one(), 1, 2}));
  CHECK_FALSE(gtf::valid(F, {F.zero(), 1, 2}));
  CHECK(gtf::valid(F, {F.generator(), 1, 2}));
  CHECK(gtf::proper({F.generator(), 1, 2}));
  CHECK_FALSE(gtf::proper({F.generator(), 0, 2}));
  CHECK_FALSE(gtf::proper({F.generator(), 1, 1}));
  CHECK_THROWS_AS(gtf::to_cubical(F, {F.one(), 1, 2}), ValidityError);
  // Product set for (q, q^2) is the subgroup of squares.
  const auto H = gtf::product_set_bruteforce(F, 1, 2);
  for (std::uint32_t v = 1; v < F.order(); ++v) CHECK(H[v] == F.sqrt(Elem{v}).has_value());
}

TEST_CASE("validity agrees with the zero-divisor scan", "[gtf][property]") {
  for (auto [q, n] : {std::pair{3, 3}, {2, 6}, {4, 3}, {2, 4}, {5, 2}}) {
    const auto Fp = Field::make(q, n);
    const Field& F = *Fp;
    CAPTURE(q, n);
    for (unsigned a = 0; a < F.n(); ++a)
      for (unsigned b = 0; b < F.n(); ++b) {
        const auto H = gtf::product_set_bruteforce(F, a, b);
        for (std::uint32_t v = 1; v < F.order(); ++v) {
          CHECK(gtf::in_product_set(F, Elem{v}, a, b) == H[v]);
          if (F.order() <= 27 || v % 7 == 1) {
            const GtfParams P{Elem{v}, a, b};
            CubicalMult C = sf::field_cubical(F);
            C.at(a, b) = F.sub(C.at(a, b), Elem{v});
            CHECK(gtf::valid(F, P) == sf::is_presemifield(F, C));
          }
        }
      }
  }
}

TEST_CASE("cubical form and multiplication", "[gtf]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const GtfParams P{F.generator(), 1, 2};
  const CubicalMult C = gtf::to_cubical(F, P);
  int nonzero = 0;
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j < 3; ++j) nonzero += C.at(i, j).v != 0;
  CHECK(nonzero == 2);
  CHECK(C.at(0, 0) == F.one());
  CHECK(C.at(1, 2) == F.neg(P.c));
  for (std::uint32_t x = 0; x < F.order(); ++x)
    for (std::uint32_t y = 0; y < F.order(); ++y) CHECK(sf::mult(F, C, Elem{x}, Elem{y}) == gtf::mult(F, P, Elem{x}, Elem{y}));
}

TEST_CASE("Knuth derivatives", "[gtf]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const Elem c = F.generator();
  const GtfParams P{c, 1, 2};
  CHECK(gtf::knuth(F, P, KnuthWord::id) == P);
  CHECK(gtf::knuth(F, P, KnuthWord::d) == GtfParams{c, 2, 1});
  CHECK(gtf::knuth(F, P, KnuthWord::t) == GtfParams{F.frob(c, 2LL), 2, 1});
  for (auto [q, n] : {std::pair{3, 3}, {2, 5}, {4, 3}, {3, 4}}) {
    const auto Gp = Field::make(q, n);
    const Field& G = *Gp;
    for (unsigned a = 1; a < n; ++a)
      for (unsigned b = 1; b < n; ++b) {
        if (a == b) continue;
        for (std::uint32_t v = 2; v < G.order(); v += 5) {
          const GtfParams Q{Elem{v}, a, b};
          if (!gtf::valid(G, Q)) continue;
          for (auto w : kAllKnuthWords) {
            const GtfParams K = gtf::knuth(G, Q, w);
            CHECK(gtf::to_cubical(G, K) == sf::knuth(G, gtf::to_cubical(G, Q), w));
          }
          CHECK(gtf::knuth(G, gtf::knuth(G, Q, KnuthWord::t), KnuthWord::t) == Q);
          CHECK(gtf::knuth(G, gtf::knuth(G, Q, KnuthWord::d), KnuthWord::d) == Q);
          CHECK(gtf::knuth(G, gtf::knuth(G, Q, KnuthWord::dtd), KnuthWord::dtd) == Q);
        }
      }
  }
}

TEST_CASE("closed-form isotopy", "[gtf]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const Elem c = F.generator();
  const GtfParams P{c, 1, 2};
  CHECK(gtf::isotopic(F, P, P));
  CHECK(gtf::isotopic(F, P, {F.frob(c, 1LL), 1, 2}));
  CHECK_FALSE(gtf::isotopic(F, P, {c, 1, 0}));
  CHECK(gtf::isotopic(F, {c, 1, 0}, {c, 0, 2}));
}

TEST_CASE("closed-form isotopy is an equivalence relation", "[gtf][property]") {
  const auto Fp = Field::make(4, 3);
  const Field& F = *Fp;
  std::vector<GtfParams> all;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (std::uint32_t v = 1; v < F.order(); ++v)
        if (gtf::valid(F, {Elem{v}, a, b})) all.push_back({Elem{v}, a, b});
  REQUIRE(std::count_if(all.begin(), all.end(), [](const GtfParams& P) { return gtf::proper(P); }) > 20);
  Sampler S(41);
  for (int it = 0; it < 2000; ++it) {
    const auto& A = all[S.below(all.size())];
    const auto& B = all[S.below(all.size())];
    const auto& C = all[S.below(all.size())];
    CHECK(gtf::isotopic(F, A, A));
    CHECK(gtf::isotopic(F, A, B) == gtf::isotopic(F, B, A));
    if (gtf::isotopic(F, A, B) && gtf::isotopic(F, B, C)) CHECK(gtf::isotopic(F, A, C));
    if (gtf::isotopic(F, A, B))
      for (auto w : kAllKnuthWords) CHECK(gtf::isotopic(F, gtf::knuth(F, A, w), gtf::knuth(F, B, w)));
  }
}

TEST_CASE("closed-form isotopy agrees with brute force over GF(27)", "[gtf][isotopy]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const Elem c = F.generator();
  IsotopySearchOptions opt;
  opt.jobs = 4;
  opt.prune_by_invariants = false;
  // Representatives of every valid (a, b) shape, with both c classes where valid.
  std::vector<GtfParams> reps;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (std::uint64_t k : {1, 2, 5})
        if (gtf::valid(F, {F.pow(c, k), a, b})) reps.push_back({F.pow(c, k), a, b});
  Sampler S(42);
  for (int it = 0; it < 12; ++it) {
    const auto& A = reps[S.below(reps.size())];
    const auto& B = reps[S.below(reps.size())];
    CAPTURE(A.c.v, A.a, A.b, B.c.v, B.a, B.b);
    const auto w = iso::isotopic_bruteforce(F, gtf::to_cubical(F, A), gtf::to_cubical(F, B), opt);
    CHECK(w.has_value() == gtf::isotopic(F, A, B));
  }
}
