#include <catch_amalgamated.hpp>

#include "belsf/io.hpp"
#include "belsf/random.hpp"

using namespace belsf;

TEST_CASE("round trips on random objects", "[io][property]") {
  for (auto [q, n] : {std::pair{2, 3}, {3, 3}, {4, 2}}) {
    const auto Fp = Field::make(q, n);
    const Field& F = *Fp;
    Sampler S(81 + q);
    for (int i = 0; i < 20; ++i) {
      const CubicalMult C = S.cubical(F);
      CHECK(io::parse_cubical(F, io::format_cubical(F, C)) == C);
      const BelConfig B = S.config(F, 2 + i % 3);
      CHECK(io::parse_bel(F, io::format_bel(F, B)) == B);
      const Rank2Pair P{S.linpoly(F), S.linpoly(F)};
      CHECK(io::parse_rank2(F, io::format_rank2(F, P)) == P);
      const GtfParams G{S.nonzero(F), static_cast<unsigned>(S.below(n)), static_cast<unsigned>(S.below(n))};
      CHECK(io::parse_gtf(F, io::format_gtf(F, G)) == G);
      const StabElement st{S.below(2) == 1, S.nonzero(F), S.nonzero(F), static_cast<unsigned>(S.below(n)), static_cast<unsigned>(S.below(n))};
      CHECK(io::parse_stab(F, io::format_stab(st)) == st);
      const Isotopism T{S.linpoly(F), S.linpoly(F), S.linpoly(F)};
      CHECK(io::parse_isotopism(F, io::format_isotopism(F, T)) == T);
      std::vector<Elem> xs;
      for (int k = 0; k < 5; ++k) xs.push_back(S.elem(F));
      CHECK(io::parse_elements(F, io::format_elements(F, xs)) == xs);
    }
    const auto h = io::document_header(io::format_gf(F));
    CHECK(io::field_from_header(h)->order() == F.order());
  }
}

TEST_CASE("comments and blank lines are ignored", "[io]") {
  const auto F = Field::make(2, 2);
  const std::string text = "# the field\n\nsemifield q=2 n=2\n1,0\n\n# row two\n0,0\n";
  CubicalMult expected = sf::field_cubical(*F);
  CHECK(io::parse_cubical(*F, text) == expected);
}

TEST_CASE("malformed inputs", "[io]") {
  const auto F = Field::make(2, 2);
  CHECK_THROWS_AS(io::parse_cubical(*F, "semifield q=2 n=2\n1,0\n"), ParseError);
  CHECK_THROWS_AS(io::parse_cubical(*F, "semifield q=2 n=2\n1,0\n0,7\n"), ParseError);
  CHECK_THROWS_AS(io::parse_cubical(*F, "semifield q=3 n=2\n1,0\n0,0\n"), ParseError);
  CHECK_THROWS_AS(io::parse_cubical(*F, "bel q=2 n=2 r=2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_gtf(*F, "gtf q=2 n=2 c=1 a=5 b=0\n"), ParseError);
  CHECK_THROWS_AS(io::parse_rank2(*F, "rank2 q=2 n=2\n[1,0]\n[1]\n"), ParseError);
  CHECK_THROWS_AS(io::parse_stab(*F, "stab kind=odd k=1 m=1 gamma=0 delta=0\n"), ParseError);
  CHECK_THROWS_AS(io::parse_elements(*F, ""), ParseError);
  CHECK_THROWS_AS(io::parse_uint("12x"), ParseError);
}
