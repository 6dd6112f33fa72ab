#include <gtest/gtest.h>

#include <random>

#include "cdgl/dgl.hpp"
#include "cdgl/errors.hpp"
#include "cdgl/lie.hpp"
#include "cdgl/lyndon.hpp"
#include "oracles.hpp"

using namespace cdgl;

namespace {

AlphabetPtr three_letters() { return make_alphabet({{"x", 0}, {"y", 1}, {"z", -1}}); }

LieElement random_element(const AlphabetPtr& a, int N, int degree, std::mt19937& rng) {
  return LieElement(a, N, oracle::random_lie(*a, degree, N, 4, rng));
}

}  // namespace

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(to_string(Scalar(6) / Scalar(-4)), "-3/2");
  EXPECT_EQ(to_string(Scalar(3)), "3/1");
  EXPECT_EQ(parse_scalar("-10/4"), Scalar(-5, 2));
  EXPECT_EQ(parse_scalar("7"), Scalar(7));
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar("1.5"), ParseError);
}

TEST(Alphabet, RejectsBadGenerators) {
  EXPECT_THROW(make_alphabet({{"a", -2}}), ConfigurationError);
  EXPECT_THROW(make_alphabet({{"a", 0}, {"a", 1}}), ConfigurationError);
  EXPECT_THROW(three_letters()->index("w"), StructuralError);
}

TEST(Bracket, EvenSquareVanishesOddSquareDoesNot) {
  auto a = three_letters();
  auto x = LieElement::generator(a, 4, "x");
  auto y = LieElement::generator(a, 4, "y");
  auto z = LieElement::generator(a, 4, "z");
  EXPECT_TRUE(bracket(x, x).is_zero());
  EXPECT_FALSE(bracket(y, y).is_zero());
  EXPECT_TRUE(bracket(y, bracket(y, y)).is_zero());
  EXPECT_FALSE(bracket(z, z).is_zero());
  EXPECT_TRUE(bracket(z, bracket(z, z)).is_zero());
}

TEST(Bracket, MixedConfigurationsAreRejected) {
  auto a = three_letters();
  auto b = make_alphabet({{"x", 0}});
  EXPECT_THROW(bracket(LieElement::generator(a, 4, "x"), LieElement::generator(a, 5, "x")), ConfigurationError);
  EXPECT_THROW(bracket(LieElement::generator(a, 4, "x"), LieElement::generator(b, 4, "x")), ConfigurationError);
  EXPECT_THROW(LieElement(a, 0), ConfigurationError);
}

TEST(Bracket, GradedAntisymmetryAndJacobiOnRandomTriples) {
  auto a = three_letters();
  std::mt19937 rng(11);
  const int N = 6;
  for (int trial = 0; trial < 30; ++trial) {
    const int dx = static_cast<int>(rng() % 3) - 1;
    const int dy = static_cast<int>(rng() % 3) - 1;
    const int dz = static_cast<int>(rng() % 3) - 1;
    auto x = random_element(a, N, dx, rng);
    auto y = random_element(a, N, dy, rng);
    auto z = random_element(a, N, dz, rng);
    EXPECT_EQ(bracket(x, y), Scalar(-koszul(dx, dy)) * bracket(y, x));
    auto jacobi = Scalar(koszul(dx, dz)) * bracket(x, bracket(y, z)) +
                  Scalar(koszul(dy, dx)) * bracket(y, bracket(z, x)) +
                  Scalar(koszul(dz, dy)) * bracket(z, bracket(x, y));
    EXPECT_TRUE(jacobi.is_zero());
    EXPECT_TRUE(dynkin_verify(*a, bracket(x, y).tensor()).ok);
  }
}

TEST(Dynkin, RecognisesLieElements) {
  auto a = make_alphabet({{"a", 0}, {"b", 0}});
  auto x = LieElement::generator(a, 4, "a");
  auto y = LieElement::generator(a, 4, "b");
  EXPECT_TRUE(dynkin_verify(*a, bracket(x, y).tensor()).ok);
  EXPECT_TRUE(dynkin_verify(*a, TensorElement()).ok);
  auto report = dynkin_verify(*a, TensorElement(Word{0, 1}));
  EXPECT_FALSE(report.ok);
  EXPECT_EQ(report.failing_lengths, std::vector<int>{2});
}

TEST(Dynkin, LeftNormedTermsReassemble) {
  auto a = three_letters();
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    TensorElement t = oracle::random_lie(*a, static_cast<int>(rng() % 3) - 1, 5, 5, rng);
    TensorElement back;
    for (const auto& term : left_normed_terms(*a, t)) add_scaled(back, term.coeff, left_normed(*a, term.word));
    EXPECT_EQ(back, t);
  }
}

TEST(Truncate, DropsLongWordsAndRefusesToRaise) {
  auto a = make_alphabet({{"a", 0}, {"b", 0}});
  auto x = LieElement::generator(a, 4, "a");
  auto y = LieElement::generator(a, 4, "b");
  auto e = x + bracket(x, y);
  EXPECT_EQ(truncate(e, 4), e);
  EXPECT_EQ(truncate(e, 1), LieElement::generator(a, 1, "a"));
  EXPECT_THROW(truncate(e, 5), ConfigurationError);
}

TEST(Lyndon, SmallComponents) {
  auto one = make_alphabet({{"a", 0}});
  EXPECT_TRUE(lyndon_basis(*one, 0, 2).empty());
  auto two = make_alphabet({{"x", 0}, {"y", 0}});
  auto len2 = lyndon_basis(*two, 0, 2);
  ASSERT_EQ(len2.size(), 1u);
  EXPECT_EQ(len2[0].tensor, tensor_bracket(*two, TensorElement(Word{0}), TensorElement(Word{1}), 4));
  auto len3 = lyndon_basis(*two, 0, 3);
  ASSERT_EQ(len3.size(), 2u);
  EXPECT_EQ(len3[0].word, (Word{0, 0, 1}));
  EXPECT_EQ(len3[1].word, (Word{0, 1, 1}));
  auto odd = make_alphabet({{"u", 1}});
  auto sq = lyndon_basis(*odd, 2, 2);
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0].word, (Word{0, 0}));
}

TEST(Lyndon, DimensionsMatchGradedWittCount) {
  const std::vector<std::vector<int>> cases = {{0, 0}, {0, 0, 0}, {1}, {0, 1}, {-1, 0}, {-1, 0, 1}, {-1, -1}, {1, 1, 2}};
  for (const auto& degs : cases) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < degs.size(); ++i) gens.push_back({"g" + std::to_string(i), degs[i]});
    auto a = make_alphabet(gens);
    auto dims = oracle::free_lie_dims(degs, 5);
    for (int len = 1; len <= 5; ++len) {
      for (int deg = -len; deg <= 2 * len; ++deg) {
        auto it = dims.find({deg, len});
        const std::int64_t want = it == dims.end() ? 0 : it->second;
        auto basis = lyndon_basis(*a, deg, len);
        EXPECT_EQ(static_cast<std::int64_t>(basis.size()), want) << "degree " << deg << " length " << len;
        for (const auto& b : basis) {
          EXPECT_FALSE(b.tensor.is_zero());
          EXPECT_TRUE(dynkin_verify(*a, b.tensor).ok);
        }
      }
    }
  }
}

TEST(Differential, LeibnizOnRandomPairs) {
  auto a = three_letters();
  const int N = 5;
  std::mt19937 rng(3);
  // any degree -1 table works for Leibniz; d^2 need not vanish
  std::vector<TensorElement> diff = {oracle::random_lie(*a, -1, 3, 2, rng), oracle::random_lie(*a, 0, 3, 2, rng),
                                     oracle::random_lie(*a, -2, 3, 2, rng)};
  FreeCompleteDGL L(a, N, diff);
  for (int trial = 0; trial < 20; ++trial) {
    const int dx = static_cast<int>(rng() % 3) - 1;
    const int dy = static_cast<int>(rng() % 3) - 1;
    auto x = random_element(a, N, dx, rng);
    auto y = random_element(a, N, dy, rng);
    auto lhs = apply_differential(L, bracket(x, y));
    auto rhs = bracket(apply_differential(L, x), y) + Scalar(koszul(dx, 1)) * bracket(x, apply_differential(L, y));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Differential, VertexModelSquaresToZero) {
  auto a = make_alphabet({{"a0", -1}});
  for (int N = 1; N <= 8; ++N) {
    auto g = LieElement::generator(a, N, "a0");
    FreeCompleteDGL L(a, N, {(Scalar(-1, 2) * bracket(g, g)).tensor()});
    EXPECT_TRUE(check_d_squared(L).empty());
  }
}

TEST(Differential, TableValidation) {
  auto a = make_alphabet({{"x", 0}, {"y", -1}});
  std::map<std::string, LieElement> table;
  table.emplace("x", LieElement::generator(a, 3, "y"));
  EXPECT_THROW(FreeCompleteDGL::from_table(a, 3, table), StructuralError);
  table.emplace("y", LieElement::generator(a, 3, "x"));
  EXPECT_THROW(FreeCompleteDGL::from_table(a, 3, table), StructuralError);
}

TEST(Morphism, ComposesAndRespectsBrackets) {
  auto a = make_alphabet({{"x", 0}, {"y", 0}});
  const int N = 5;
  LieMorphism swap(a, a, N, {TensorElement(Word{1}), TensorElement(Word{0})});
  auto x = LieElement::generator(a, N, "x");
  auto y = LieElement::generator(a, N, "y");
  EXPECT_EQ(swap.apply(bracket(x, bracket(x, y))), bracket(y, bracket(y, x)));
  auto id = swap.after(swap);
  EXPECT_EQ(id.apply(bracket(x, bracket(x, y))), bracket(x, bracket(x, y)));
}
