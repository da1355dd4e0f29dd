#include <catch_amalgamated.hpp>

#include "belsf/gtf.hpp"
#include "belsf/isotopy.hpp"
#include "belsf/random.hpp"

using namespace belsf;

TEST_CASE("invariants", "[isotopy]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const auto fi = iso::invariants(F, sf::field_cubical(F));
  CHECK(fi.nuclei == sf::Nuclei{27, 27, 27, 27});
  const GtfParams P{F.generator(), 1, 2};
  const auto gi = iso::invariants(F, gtf::to_cubical(F, P));
  CHECK(gi.nuclei.left < 27);
  CHECK(gi.nuclei.middle < 27);
  CHECK(gi.nuclei.right < 27);
  CHECK(gi == iso::invariants(F, gtf::to_cubical(F, {F.frob(P.c, 1LL), 1, 2})));
  CHECK(gi == iso::invariants(F, gtf::to_cubical(F, gtf::knuth(F, P, KnuthWord::dtd))));
}

TEST_CASE("identity and constructed isotopes", "[isotopy]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const CubicalMult C = gtf::to_cubical(F, {F.generator(), 1, 2});
  const auto w = iso::isotopic_bruteforce(F, C, C);
  REQUIRE(w.has_value());
  CHECK(w->A == lp::identity(F));
  CHECK(w->B == lp::identity(F));
  CHECK(w->C == lp::identity(F));

  Sampler S(71);
  for (int i = 0; i < 3; ++i) {
    const LinPoly A = S.invertible_linpoly(F), Ai = lp::comp_inverse(F, A);
    // C2(A x, y) = C(x, y).
    const CubicalMult C2 = sf::cubical_from_bilinear(F, [&](Elem x, Elem y) { return sf::mult(F, C, lp::evaluate(F, Ai, x), y); });
    IsotopySearchOptions opt;
    opt.jobs = 3;
    const auto found = iso::isotopic_bruteforce(F, C, C2, opt);
    REQUIRE(found.has_value());
    CHECK(iso::verify(F, C, C2, *found));
    CHECK(iso::verify(F, C, C2, {A, lp::identity(F), lp::identity(F)}));
  }
}

TEST_CASE("search results do not depend on the worker count", "[isotopy]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const CubicalMult A = gtf::to_cubical(F, {F.generator(), 1, 2});
  const CubicalMult B = gtf::to_cubical(F, {F.pow(F.generator(), 5), 2, 1});
  std::optional<Isotopism> first;
  for (unsigned jobs : {1u, 2u, 5u, 8u}) {
    IsotopySearchOptions opt;
    opt.jobs = jobs;
    const auto w = iso::isotopic_bruteforce(F, A, B, opt);
    REQUIRE(w.has_value());
    if (!first) first = w;
    CHECK(*w == *first);
  }
}

TEST_CASE("budget and validity", "[isotopy]") {
  const auto Fp = Field::make(2, 5);
  const Field& F = *Fp;
  CHECK_THROWS_AS(iso::isotopic_bruteforce(F, sf::field_cubical(F), sf::field_cubical(F)), BudgetError);
  const auto G = Field::make(2, 3);
  CHECK_THROWS_AS(iso::isotopic_bruteforce(*G, sf::zero(*G), sf::field_cubical(*G)), ValidityError);
  IsotopySearchOptions big;
  big.budget = 32;
  CHECK(iso::isotopic_bruteforce(F, sf::field_cubical(F), sf::field_cubical(F), big).has_value());
}

TEST_CASE("every presemifield of order 8 is isotopic to the field", "[isotopy][property]") {
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  Sampler S(72);
  for (int i = 0; i < 25; ++i) {
    const CubicalMult C = S.presemifield(F);
    const auto w = iso::isotopic_bruteforce(F, sf::field_cubical(F), C);
    REQUIRE(w.has_value());
    CHECK(iso::verify(F, sf::field_cubical(F), C, *w));
  }
}

TEST_CASE("pruning never changes the answer", "[isotopy]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const Elem c = F.generator();
  const std::vector<GtfParams> ps = {{c, 1, 2}, {c, 1, 0}, {F.pow(c, 3), 2, 1}, {c, 1, 1}};
  IsotopySearchOptions pruned, full;
  full.prune_by_invariants = false;
  pruned.jobs = full.jobs = 4;
  for (const auto& a : ps)
    for (const auto& b : ps) {
      const auto A = gtf::to_cubical(F, a), B = gtf::to_cubical(F, b);
      CHECK(iso::isotopic_bruteforce(F, A, B, pruned).has_value() == iso::isotopic_bruteforce(F, A, B, full).has_value());
    }
}
