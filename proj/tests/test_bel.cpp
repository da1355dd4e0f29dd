#include <catch_amalgamated.hpp>

#include "belsf/bel.hpp"
#include "belsf/gtf.hpp"
#include "belsf/random.hpp"
#include "belsf/rank2.hpp"

using namespace belsf;

namespace {

BelConfig field_config(const Field& F) { return {2, {lp::identity(F), lp::zero(F)}, {lp::identity(F), lp::zero(F)}}; }

bool same_mult(const Field& F, const BelConfig& A, const BelConfig& B) {
  for (std::uint32_t x = 0; x < F.order(); ++x)
    for (std::uint32_t y = 0; y < F.order(); ++y)
      if (bel::mult(F, A, Elem{x}, Elem{y}) != bel::mult(F, B, Elem{x}, Elem{y})) return false;
  return true;
}

// dim U_f and dim W_g by counting kernel and image elements.
std::pair<std::uint64_t, std::uint64_t> counted_dims(const Field& F, const BelConfig& B) {
  std::uint64_t ker_f = 0;
  for (std::uint32_t x = 0; x < F.order(); ++x) {
    bool zero = true;
    for (unsigned i = 0; i < B.r; ++i) zero = zero && lp::evaluate(F, B.f[i], Elem{x}).v == 0;
    ker_f += zero;
  }
  std::set<std::uint32_t> image;
  std::vector<std::uint32_t> idx(B.r, 0);
  for (;;) {
    Elem s = F.zero();
    for (unsigned i = 0; i < B.r; ++i) s = F.add(s, lp::evaluate(F, B.g[i], Elem{idx[i]}));
    image.insert(s.v);
    unsigned k = 0;
    while (k < B.r && ++idx[k] == F.order()) idx[k++] = 0;
    if (k == B.r) break;
  }
  return {ker_f, image.size()};
}

}  // namespace

TEST_CASE("dimension conditions", "[bel]") {
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  CHECK(bel::dims_ok(F, field_config(F)));
  CHECK_FALSE(bel::dims_ok(F, {2, {lp::zero(F), lp::zero(F)}, {lp::identity(F), lp::zero(F)}}));
  CHECK_THROWS_AS(bel::require_dims(F, {2, {lp::zero(F), lp::zero(F)}, {lp::identity(F), lp::zero(F)}}), DimensionError);
  Sampler S(51);
  for (int i = 0; i < 100; ++i) {
    const BelConfig B = S.config(F, 2);
    const auto [ker, img] = counted_dims(F, B);
    CHECK(bel::dims_ok(F, B) == (ker == 1 && img == F.order()));
  }
}

TEST_CASE("small configurations", "[bel]") {
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  const BelConfig Fc = field_config(F);
  CHECK(bel::is_bel(F, Fc));
  CHECK_FALSE(bel::is_bel(F, {2, {lp::identity(F), lp::zero(F)}, {lp::zero(F), lp::identity(F)}}));
  CHECK(bel::to_cubical(F, Fc) == sf::field_cubical(F));
  for (std::uint32_t x = 0; x < 8; ++x) {
    CHECK(bel::mult(F, Fc, Elem{x}, Elem{3}) == F.mul(Elem{x}, Elem{3}));
    CHECK(bel::mult(F, Fc, Elem{x}, F.zero()) == F.zero());
  }
  const auto D = bel::spread(F, Fc);
  CHECK(D == sf::spread_of(F, sf::field_cubical(F)));
  CHECK(bel::perp_transpose(F, Fc) == Fc);
  const auto psi = bel::psi_image(F, Fc);
  CHECK(psi[0] == lp::zero(F));
  for (std::uint32_t x = 0; x < 8; ++x) CHECK(psi[x] == lp::scalar(F, Elem{x}));
}

TEST_CASE("GTF configuration over GF(27)", "[bel]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const GtfParams P{F.generator(), 1, 2};
  const BelConfig B = rank2::gtf_config(F, P);
  CHECK(bel::is_bel(F, B));
  CHECK(bel::to_cubical(F, B) == gtf::to_cubical(F, P));
  for (std::uint32_t x = 0; x < F.order(); ++x)
    for (std::uint32_t y = 0; y < F.order(); ++y)
      CHECK(bel::mult(F, B, Elem{x}, Elem{y}) ==
            F.sub(F.mul(Elem{x}, Elem{y}), F.mul(P.c, F.mul(F.pow(Elem{x}, 3), F.pow(Elem{y}, 9)))));
  CHECK(bel::spread(F, B) == sf::spread_of(F, sf::knuth(F, gtf::to_cubical(F, P), KnuthWord::d)));
  const BelConfig T = bel::perp_transpose(F, B);
  const auto tp = rank2::gtf_from_cubical(F, bel::to_cubical(F, T));
  REQUIRE(tp.has_value());
  CHECK(gtf::isotopic(F, *tp, gtf::knuth(F, P, KnuthWord::t)));
  CHECK(*tp == gtf::knuth(F, P, KnuthWord::t));
}

TEST_CASE("cubical conversion and canonical configurations", "[bel][property]") {
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  Sampler S(52);
  for (int i = 0; i < 30; ++i) {
    const BelConfig B = S.config(F, 3);
    const CubicalMult C = bel::to_cubical(F, B);
    for (std::uint32_t x = 0; x < 8; ++x)
      for (std::uint32_t y = 0; y < 8; ++y) CHECK(sf::mult(F, C, Elem{x}, Elem{y}) == bel::mult(F, B, Elem{x}, Elem{y}));
    const CubicalMult X = S.cubical(F);
    CHECK(bel::to_cubical(F, bel::canonical_config(F, X)) == X);
    auto [M, Minv] = S.gl_matrix(F, 3);
    CHECK(same_mult(F, B, bel::apply_gl(F, B, M, Minv)));
  }
}

TEST_CASE("five BEL conditions agree", "[bel][property]") {
  for (auto [q, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto Fp = Field::make(q, n);
    const Field& F = *Fp;
    Sampler S(53 + q + n);
    for (unsigned r = 2; r <= 3; ++r)
      for (int i = 0; i < 40; ++i) {
        const BelConfig B = (i % 2 == 0) ? S.config_with_dims(F, r) : S.bel_config(F, r == 3 && n == 2 ? 2 : r);
        CAPTURE(q, n, r, i);
        const auto P = bel::properties(F, B);
        CHECK(P.all_agree());
        CHECK(P.zero_divisor_free == bel::is_bel(F, B));
      }
  }
}

TEST_CASE("spread of a BEL-configuration", "[bel][property]") {
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  Sampler S(54);
  for (int i = 0; i < 10; ++i) {
    const BelConfig B = S.bel_config(F, 2);
    const auto Sp = bel::spread(F, B);
    CHECK(sf::is_spread(F, Sp));
    CHECK(Sp.graphs.size() + 1 == 9);
    const auto psi = bel::psi_image(F, B);
    for (std::uint32_t x = 1; x < 8; ++x) CHECK(lp::is_invertible(F, psi[x]));
  }
  CHECK_THROWS_AS(bel::spread(F, {2, {lp::identity(F), lp::zero(F)}, {lp::zero(F), lp::identity(F)}}), ValidityError);
}

TEST_CASE("reducing r", "[bel]") {
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  Sampler S(55);
  // A BEL pair whose W contains no spread element.
  BelConfig B2 = S.bel_config(F, 2);
  for (int tries = 0; bel::find_spread_element_in_W(F, B2) && tries < 200; ++tries) B2 = S.bel_config(F, 2);
  REQUIRE_FALSE(bel::find_spread_element_in_W(F, B2).has_value());
  const BelConfig B{3, {B2.f[0], B2.f[1], S.linpoly(F)}, {B2.g[0], B2.g[1], lp::zero(F)}};
  const auto v = bel::find_spread_element_in_W(F, B);
  REQUIRE(v.has_value());
  CHECK(*v == RnVector{F.zero(), F.zero(), F.one()});
  const BelConfig R = bel::reduce_r(F, B);
  CHECK(R.r == 2);
  CHECK(R.f == B2.f);
  CHECK(R.g == B2.g);

  // g3 = g2 o (x -> lambda x): (0, lambda, 1) lies in W up to scaling.
  for (std::uint32_t l = 1; l < 8; ++l) {
    const Elem lambda{l};
    const BelConfig C{3, {B2.f[0], B2.f[1], S.linpoly(F)},
                      {B2.g[0], B2.g[1], lp::neg(F, lp::precompose_scalar(F, B2.g[1], lambda))}};
    const auto w = bel::find_spread_element_in_W(F, C);
    REQUIRE(w.has_value());
    Elem s = F.zero();
    for (unsigned i = 0; i < 3; ++i) s = F.add(s, lp::evaluate(F, C.g[i], F.mul((*w)[i], Elem{5})));
    CHECK(s == F.zero());
    const BelConfig Rc = bel::reduce_r(F, C);
    CHECK(Rc.r == 2);
    CHECK(same_mult(F, C, Rc));
  }
  CHECK_THROWS_AS(bel::reduce_r(F, B2), DomainError);
  const BelConfig canon = bel::canonical_config(F, sf::field_cubical(F));
  CHECK_FALSE(bel::find_spread_element_in_W(F, canon).has_value());
  CHECK_THROWS_AS(bel::reduce_r(F, canon), NotReducibleError);
}

TEST_CASE("perp-transpose", "[bel][property]") {
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  Sampler S(56);
  for (int i = 0; i < 30; ++i) {
    const BelConfig B = S.bel_config(F, 2 + i % 2);
    const BelConfig T = bel::perp_transpose(F, B);
    CHECK(bel::perp_transpose(F, T) == B);
    CHECK(bel::is_bel(F, T));
    CHECK(bel::to_cubical(F, T) == sf::knuth(F, bel::to_cubical(F, B), KnuthWord::t));
  }
}

TEST_CASE("symmetric rank-one decomposition", "[bel]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const auto field = bel::symplectic_config(F, sf::field_cubical(F));
  REQUIRE(field.vectors.size() == 1);
  CHECK(field.vectors[0] == std::vector<Elem>{F.one(), F.zero(), F.zero()});
  CHECK(field.config.f[0] == lp::identity(F));
  CHECK(bel::to_cubical(F, field.config) == sf::field_cubical(F));

  Sampler S(57);
  for (int i = 0; i < 50; ++i) {
    const CubicalMult C = S.symmetric_cubical(F);
    const auto res = bel::symplectic_config(F, C);
    CubicalMult R = sf::zero(F);
    for (const auto& v : res.vectors)
      for (unsigned a = 0; a < 3; ++a)
        for (unsigned b = 0; b < 3; ++b) R.at(a, b) = F.add(R.at(a, b), F.mul(v[a], v[b]));
    CHECK(R == C);
    CHECK(res.vectors.size() <= 3 * 3 * 4 / 2);
    for (unsigned k = 0; k < res.config.r; ++k) CHECK(res.config.g[k] == lp::adjoint(F, res.config.f[k]));
    CHECK(bel::to_cubical(F, res.config) == sf::knuth_raw(F, C, KnuthWord::dtd));
  }

  const auto Gp = Field::make(2, 2);
  CubicalMult W = sf::zero(*Gp);
  W.at(0, 1) = W.at(1, 0) = Gp->one();
  CHECK(bel::symmetric_rank_one(*Gp, W).size() == 3);
  CubicalMult A = sf::zero(F);
  A.at(0, 1) = F.one();
  CHECK_THROWS_AS(bel::symmetric_rank_one(F, A), DomainError);
}

TEST_CASE("commutative presemifields give symplectic BEL-configurations", "[bel]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  CubicalMult albert = sf::zero(F);
  albert.at(0, 1) = albert.at(1, 0) = F.one();
  REQUIRE(sf::is_presemifield(F, albert));
  const auto res = bel::symplectic_config(F, albert);
  CHECK(bel::is_bel(F, res.config));
  CHECK(bel::to_cubical(F, res.config) == sf::knuth_raw(F, albert, KnuthWord::dtd));
}
