#include <catch_amalgamated.hpp>

#include "belsf/gtf.hpp"
#include "belsf/random.hpp"
#include "belsf/semifield.hpp"

using namespace belsf;

namespace {

bool has_zero_divisor_scan(const Field& F, const CubicalMult& C) {
  for (std::uint32_t x = 1; x < F.order(); ++x)
    for (std::uint32_t y = 1; y < F.order(); ++y)
      if (sf::mult(F, C, Elem{x}, Elem{y}).v == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("field array", "[semifield]") {
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  const CubicalMult C = sf::field_cubical(F);
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y) CHECK(sf::mult(F, C, Elem{x}, Elem{y}) == F.mul(Elem{x}, Elem{y}));
  CHECK(sf::right_mult(F, C, Elem{3}) == lp::scalar(F, Elem{3}));
  CHECK(sf::right_mult(F, C, F.zero()) == lp::zero(F));
  CHECK(sf::is_presemifield(F, C));
  CHECK_FALSE(sf::is_presemifield(F, sf::zero(F)));
  for (auto w : kAllKnuthWords) CHECK(sf::knuth(F, C, w) == C);
  CHECK(sf::unitalize(F, C, F.one()) == C);
  const auto N = sf::nuclei(F, C);
  CHECK(N == sf::Nuclei{8, 8, 8, 8});
}

TEST_CASE("multiplication and maps agree", "[semifield]") {
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  Sampler S(21);
  for (int i = 0; i < 10; ++i) {
    const CubicalMult C = S.cubical(F);
    for (std::uint32_t x = 0; x < 8; ++x)
      for (std::uint32_t y = 0; y < 8; ++y) {
        CHECK(lp::evaluate(F, sf::right_mult(F, C, Elem{y}), Elem{x}) == sf::mult(F, C, Elem{x}, Elem{y}));
        CHECK(lp::evaluate(F, sf::left_mult(F, C, Elem{x}), Elem{y}) == sf::mult(F, C, Elem{x}, Elem{y}));
      }
    CHECK(sf::mult(F, C, Elem{5}, F.zero()) == F.zero());
    CHECK(sf::is_presemifield(F, C) == !has_zero_divisor_scan(F, C));
  }
}

TEST_CASE("GTF arrays over GF(27)", "[semifield]") {
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const Elem c = F.generator();
  const CubicalMult C = gtf::to_cubical(F, {c, 1, 2});
  Sampler S(22);
  for (int i = 0; i < 100; ++i) {
    const Elem x = S.elem(F), y = S.elem(F);
    CHECK(sf::mult(F, C, x, y) == F.sub(F.mul(x, y), F.mul(c, F.mul(F.pow(x, 3), F.pow(y, 9)))));
  }
  CHECK(sf::is_presemifield(F, C));
  // c a square lies in the product set: some x^(q-1) y^(q^2-1) = c.
  CubicalMult Cs = sf::field_cubical(F);
  Cs.at(1, 2) = F.neg(F.mul(c, c));
  CHECK_FALSE(sf::is_presemifield(F, Cs));
  CHECK(has_zero_divisor_scan(F, Cs));

  const CubicalMult U = sf::unitalize(F, C, F.one());
  const Elem e = sf::mult(F, C, F.one(), F.one());
  for (std::uint32_t z = 0; z < F.order(); ++z) {
    CHECK(sf::mult(F, U, e, Elem{z}) == Elem{z});
    CHECK(sf::mult(F, U, Elem{z}, e) == Elem{z});
  }
  const auto N = sf::nuclei(F, C);
  CHECK(N.left < 27);
  CHECK(N.middle < 27);
  CHECK(N.right < 27);
  CHECK(N.centre >= 3);
  CHECK(N == sf::nuclei_bruteforce(F, C));
}

TEST_CASE("unitalization has identity e*e", "[semifield]") {
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  Sampler S(23);
  for (int i = 0; i < 10; ++i) {
    const CubicalMult C = S.presemifield(F);
    const Elem e = S.nonzero(F);
    const CubicalMult U = sf::unitalize(F, C, e);
    const Elem ee = sf::mult(F, C, e, e);
    for (std::uint32_t z = 0; z < F.order(); ++z) {
      CHECK(sf::mult(F, U, ee, Elem{z}) == Elem{z});
      CHECK(sf::mult(F, U, Elem{z}, ee) == Elem{z});
    }
  }
}

TEST_CASE("Knuth orbit: S3 relations, invariance, transpose as adjoint", "[semifield][property]") {
  using K = KnuthWord;
  for (auto [q, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const auto Fp = Field::make(q, n);
    const Field& F = *Fp;
    Sampler S(30 + q + n);
    CAPTURE(q, n);
    for (int i = 0; i < 20; ++i) {
      const CubicalMult C = S.presemifield(F);
      CHECK(sf::knuth(F, sf::knuth(F, C, K::t), K::t) == C);
      CHECK(sf::knuth(F, sf::knuth(F, C, K::d), K::d) == C);
      CHECK(sf::knuth_raw(F, sf::knuth_raw(F, sf::knuth_raw(F, C, K::t), K::d), K::t) ==
            sf::knuth_raw(F, sf::knuth_raw(F, sf::knuth_raw(F, C, K::d), K::t), K::d));
      for (auto w : kAllKnuthWords) CHECK(sf::is_presemifield(F, sf::knuth(F, C, w)));
      const CubicalMult Ct = sf::knuth(F, C, K::t);
      for (std::uint32_t y = 0; y < F.order(); ++y)
        CHECK(sf::right_mult(F, Ct, Elem{y}) == lp::adjoint(F, sf::right_mult(F, C, Elem{y})));
      const CubicalMult X = S.cubical(F);
      for (auto w : kAllKnuthWords) CHECK(sf::is_presemifield(F, sf::knuth_raw(F, X, w)) == sf::is_presemifield(F, X));
    }
  }
}

TEST_CASE("nuclei under transpose", "[semifield]") {
  // Transpose exchanges the left and middle nuclei and fixes the right one.
  const auto Fp = Field::make(3, 3);
  const Field& F = *Fp;
  const CubicalMult C = gtf::to_cubical(F, {F.generator(), 1, 2});
  const auto N = sf::nuclei(F, C);
  const auto Nt = sf::nuclei(F, sf::knuth(F, C, KnuthWord::t));
  CHECK(Nt.right == N.right);
  CHECK(Nt.left == N.middle);
  CHECK(Nt.middle == N.left);
  const auto Fq = Field::make(2, 3);
  Sampler S(31);
  for (int i = 0; i < 10; ++i) {
    const CubicalMult D = S.presemifield(*Fq);
    const auto M = sf::nuclei(*Fq, D);
    const auto Mt = sf::nuclei(*Fq, sf::knuth(*Fq, D, KnuthWord::t));
    CHECK(Mt.right == M.right);
    CHECK(M == sf::nuclei_bruteforce(*Fq, D));
  }
}

TEST_CASE("spreads", "[semifield]") {
  const auto Fp = Field::make(2, 3);
  const Field& F = *Fp;
  const auto D = sf::spread_of(F, sf::field_cubical(F));
  CHECK(sf::is_spread(F, D));
  CHECK(D.graphs.size() + (D.has_infinity ? 1 : 0) == 9);
  CHECK(sf::dual_spread_epsilon(F, D) == D);
  Sampler S(32);
  for (int i = 0; i < 10; ++i) {
    const CubicalMult C = S.presemifield(F);
    const auto Sp = sf::spread_of(F, C);
    CHECK(sf::is_spread(F, Sp));
    // The eps-dual of the graph of R_y is the graph of the adjoint of R_y.
    for (std::uint32_t y = 0; y < F.order(); ++y) {
      const LinPoly R = sf::right_mult(F, C, Elem{y}), Rh = lp::adjoint(F, R);
      bool ok = true;
      for (std::uint32_t a = 0; a < F.order(); ++a)
        for (std::uint32_t b = 0; b < F.order(); ++b)
          ok = ok && sf::b_epsilon(F, Elem{a}, lp::evaluate(F, R, Elem{a}), Elem{b}, lp::evaluate(F, Rh, Elem{b})).v == 0;
      CHECK(ok);
    }
    CHECK(sf::dual_spread_epsilon(F, Sp) == sf::spread_of(F, sf::knuth(F, C, KnuthWord::t)));
  }
}

TEST_CASE("shape and domain errors", "[semifield]") {
  const auto F1 = Field::make(4, 1);
  CHECK_THROWS_AS(sf::require_dim(*F1), DomainError);
  const auto Fp = Field::make(2, 3);
  CubicalMult bad{2, std::vector<Elem>(4)};
  CHECK_THROWS(sf::check_shape(*Fp, bad));
  CHECK_THROWS_AS(sf::nuclei(*Fp, sf::zero(*Fp)), ValidityError);
  CHECK(parse_knuth_word("tdt") == KnuthWord::dtd);
}
