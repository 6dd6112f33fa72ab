#include <gtest/gtest.h>

#include <random>

#include "cdgl/errors.hpp"
#include "cdgl/homology.hpp"
#include "cdgl/lyndon.hpp"
#include "cdgl/series.hpp"
#include "oracles.hpp"

using namespace cdgl;

namespace {

FreeCompleteDGL free_dgl(std::vector<Generator> gens, int N) {
  auto a = make_alphabet(std::move(gens));
  return FreeCompleteDGL(a, N, std::vector<TensorElement>(static_cast<std::size_t>(a->size())));
}

// Rank of rational vectors in full word coordinates, by clearing denominators
// and running the dense Bareiss oracle.
int word_rank(const std::vector<LieElement>& xs) {
  std::map<Word, int> column;
  for (auto& x : xs)
    for (auto& t : x.tensor()) column.emplace(t.word, 0);
  int c = 0;
  for (auto& [w, i] : column) i = c++;
  std::vector<std::vector<mpz_class>> m;
  for (auto& x : xs) {
    mpz_class den = 1;
    for (auto& t : x.tensor()) den = lcm(den, mpz_class(t.coeff.get_den()));
    std::vector<mpz_class> row(static_cast<std::size_t>(c));
    for (auto& t : x.tensor()) row[column[t.word]] = mpz_class(t.coeff * den);
    m.push_back(row);
  }
  return oracle::dense_rank(m);
}

const char* figure_eight = "0 1\n1 2\n0 2\n0 3\n3 4\n0 4\n";

}  // namespace

TEST(Homology, VertexModelTwistedIsAcyclic) {
  auto L = vertex_model(4).dgl;
  auto La = twist(L, L.generator("a0"));
  auto r = homology(La, -4, 0, {true, true});
  for (auto& d : r.degrees) EXPECT_EQ(d.dim(), 0) << d.degree;
  EXPECT_EQ(r.at(-1).chains, 1);
}

TEST(Homology, CircleLinearPart) {
  auto m = model_of_complex(parse_complex("0 1\n1 2\n0 2\n"), 3);
  auto lin = linear_homology(m.dgl);
  EXPECT_EQ(lin[-1], 1);
  EXPECT_EQ(lin[0], 1);
}

TEST(Homology, FreeWithZeroDifferentialMatchesWitt) {
  const std::vector<std::vector<int>> cases = {{1}, {0, 0}, {0, 1}, {-1, 0, 2}, {1, 1}};
  for (const auto& degs : cases) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < degs.size(); ++i) gens.push_back({"x" + std::to_string(i), degs[i]});
    const int N = 4;
    auto L = free_dgl(gens, N);
    auto dims = oracle::free_lie_dims(degs, N);
    auto r = homology(L, -3, 4, {true, true});
    for (auto& h : r.degrees) {
      std::int64_t expect = 0;
      for (auto& [key, n] : dims)
        if (key.first == h.degree) expect += n;
      EXPECT_EQ(h.dim(), expect) << "degree " << h.degree;
      EXPECT_EQ(static_cast<int>(h.representatives.size()), h.dim());
    }
  }
}

TEST(Homology, OddGeneratorAtLengthTwo) {
  auto L = free_dgl({{"x", 1}}, 2);
  auto r = homology(L, 1, 2);
  EXPECT_EQ(r.at(1).dim(), 1);
  EXPECT_EQ(r.at(2).dim(), 1);
}

TEST(Homology, RepresentativesAreCycles) {
  auto L = ls_interval(4).dgl;
  auto La = twist(L, L.generator("a0"));
  auto r = homology(La, -2, 0, {true, true});
  for (auto& h : r.degrees) {
    EXPECT_EQ(h.dim(), 0) << h.degree;
    for (auto& z : h.representatives) EXPECT_TRUE(apply_differential(La, z).is_zero());
  }
  auto m = model_of_complex(parse_complex(figure_eight), 3);
  auto Lm = twist(m.dgl, m.dgl.generator("a0"));
  auto h0 = homology(Lm, 0, 0, {true, true}).at(0);
  EXPECT_EQ(h0.dim(), 5);
  for (auto& z : h0.representatives) EXPECT_TRUE(apply_differential(Lm, z).is_zero());
}

TEST(Pi, SphereFromOddGenerator) {
  auto L = free_dgl({{"x", 1}}, 3);
  auto p2 = pi_n(L, 2);
  EXPECT_EQ(p2.dim(), 1);
  ASSERT_EQ(p2.representatives.size(), 1u);
  EXPECT_EQ(p2.representatives[0], L.generator("x"));
}

TEST(Pi, TwoGeneratorsNonabelian) {
  auto L = free_dgl({{"x", 0}, {"y", 0}}, 2);
  auto g = pi_1(L);
  ASSERT_EQ(g.dim(), 3);
  EXPECT_NE(g.table(0, 1), g.table(1, 0));
  const auto xy = g.coordinates(bracket(L.generator("x"), L.generator("y")));
  auto expect = g.unit(0);
  for (std::size_t k = 0; k < expect.size(); ++k) expect[k] += g.unit(1)[k] + Scalar(1, 2) * xy[k];
  EXPECT_EQ(g.table(0, 1), expect);
}

TEST(Pi, AbelianizationIsQ2) {
  auto L = free_dgl({{"x", 0}, {"y", 0}}, 1);
  auto g = pi_1(L);
  EXPECT_EQ(g.dim(), 2);
  EXPECT_EQ(g.table(0, 1), g.table(1, 0));
}

TEST(Pi, NegativeGeneratorsRejected) {
  auto L = ls_interval(2).dgl;
  EXPECT_THROW(pi_1(L), DomainError);
  EXPECT_THROW(pi_n(L, 2), DomainError);
  EXPECT_THROW(pi_n(free_dgl({{"x", 0}}, 2), 1), DomainError);
}

TEST(VerifySimplex, VerticesAreMcElements) {
  const int N = 4;
  auto L = ls_interval(N).dgl;
  auto v = vertex_model(N);
  for (auto z : {L.generator("a0"), L.generator("a1"), L.generator("a0") + L.generator("a1"), L.zero(),
                 Scalar(2) * L.generator("a0")}) {
    EXPECT_EQ(verify_simplex(v, L, {z}), is_mc(L, z));
  }
}

TEST(VerifySimplex, EdgeWithZeroEndpoints) {
  auto L = free_dgl({{"x", 0}, {"y", 1}}, 3);
  auto e = ls_interval(3);
  EXPECT_TRUE(verify_simplex(e, L, {L.zero(), L.zero(), L.generator("x")}));
  EXPECT_THROW(verify_simplex(e, L, {L.zero(), L.zero(), L.generator("y")}), DomainError);
}

TEST(VerifySimplex, TriangleFromTwoEdges) {
  const int N = 4;
  auto L = free_dgl({{"f", 0}, {"g", 0}}, N);
  auto t = triangle_model(N);
  const auto f = L.generator("f");
  const auto g = L.generator("g");
  auto h = [&](const LieElement& h02) {
    std::vector<LieElement> img(7, L.zero());
    img[t.dgl.alphabet()->index("a01")] = g;
    img[t.dgl.alphabet()->index("a12")] = f;
    img[t.dgl.alphabet()->index("a02")] = h02;
    return img;
  };
  EXPECT_TRUE(verify_simplex(t, L, h(bch(g, f))));
  EXPECT_FALSE(verify_simplex(t, L, h(bch(f, g))));
  EXPECT_FALSE(verify_simplex(t, L, h(f + g)));
}

TEST(Gauge, Certificates) {
  const int N = 5;
  auto L = ls_interval(N).dgl;
  const auto a0 = L.generator("a0");
  const auto a1 = L.generator("a1");
  EXPECT_TRUE(gauge_equivalent_certificate(L, a1, a0, L.generator("a01")));
  EXPECT_TRUE(gauge_equivalent_certificate(L, a0, a0, L.zero()));
  EXPECT_FALSE(gauge_equivalent_certificate(L, a0, a1, L.zero()));
  EXPECT_THROW(gauge_equivalent_certificate(L, a0 + a1, a0, L.zero()), DomainError);
}

TEST(Localize, ZeroDifferentialKeepsNonNegativePart) {
  auto L = free_dgl({{"x", 0}, {"y", 1}, {"w", -1}}, 3);
  auto loc = localize(L, L.zero(), 2);
  for (int d = 0; d <= 2; ++d) EXPECT_EQ(loc.basis[d].size(), quotient_basis(L, d).size()) << d;
  EXPECT_TRUE(loc.squares_to_zero());
}

TEST(Localize, IntervalAtVertex) {
  const int N = 3;
  auto L = ls_interval(N).dgl;
  const auto a0 = L.generator("a0");
  auto loc = localize(L, a0, 1);
  auto La = twist(L, a0);
  const auto c0 = quotient_basis(La, 0);
  std::vector<LieElement> images;
  for (auto& c : c0) images.push_back(apply_differential(La, c));
  EXPECT_EQ(static_cast<int>(loc.basis[0].size()), static_cast<int>(c0.size()) - word_rank(images));
  for (auto& z : loc.basis[0]) EXPECT_TRUE(apply_differential(La, z).is_zero());
  EXPECT_TRUE(loc.squares_to_zero());
  EXPECT_THROW(localize(L, a0 + L.generator("a1"), 1), DomainError);
}

TEST(Localize, TriangleSquaresToZero) {
  auto L = triangle_model(3).dgl;
  auto loc = localize(L, L.generator("a1"), 2);
  EXPECT_TRUE(loc.squares_to_zero());
}

TEST(Malcev, CircleIsAbelianRankOne) {
  auto tower = malcev_tower(parse_complex("0 1\n1 2\n0 2\n"), 0, 4);
  std::vector<int> layers;
  for (auto& l : tower) layers.push_back(l.layer_dim);
  EXPECT_EQ(layers, (std::vector<int>{1, 0, 0, 0}));
}

TEST(Malcev, ContractibleIsTrivial) {
  for (auto& l : malcev_tower(parse_complex("0 1 2"), 1, 3)) EXPECT_EQ(l.quotient.dim(), 0);
}

TEST(Malcev, FigureEightMatchesWitt) {
  const int N = 4;
  auto tower = malcev_tower(parse_complex(figure_eight), 0, N);
  auto witt = oracle::free_lie_dims({0, 0}, N);
  for (int k = 1; k <= N; ++k) {
    auto& l = tower[static_cast<std::size_t>(k - 1)];
    EXPECT_EQ(l.layer_dim, (witt[{0, k}])) << k;
    EXPECT_TRUE(l.surjective);
    EXPECT_TRUE(l.kernel_is_layer);
  }
  EXPECT_NE(tower[1].quotient.table(0, 1), tower[1].quotient.table(1, 0));
}

TEST(Malcev, GroupAxioms) {
  auto tower = malcev_tower(parse_complex(figure_eight), 2, 4);
  const auto& g = tower.back().quotient;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  auto rnd = [&] {
    MalcevQuotient::Coords v(static_cast<std::size_t>(g.dim()));
    for (auto& x : v) x = Scalar(c(rng)) / (1 + (c(rng) + 3) % 3);
    return v;
  };
  const MalcevQuotient::Coords zero(static_cast<std::size_t>(g.dim()));
  for (int trial = 0; trial < 10; ++trial) {
    auto a = rnd(), b = rnd(), d = rnd();
    EXPECT_EQ(g.multiply(g.multiply(a, b), d), g.multiply(a, g.multiply(b, d)));
    auto inv = a;
    for (auto& x : inv) x = -x;
    EXPECT_EQ(g.multiply(a, inv), zero);
    EXPECT_EQ(g.multiply(a, zero), a);
  }
}

TEST(Malcev, DisconnectedThrows) {
  EXPECT_THROW(malcev_tower(parse_complex("0\n1\n"), 0, 2), DomainError);
}

TEST(Malcev, CoordinatesRejectNonCycles) {
  auto m = model_of_complex(parse_complex(figure_eight), 2);
  auto La = twist(m.dgl, m.dgl.generator("a0"));
  MalcevQuotient g(La);
  EXPECT_THROW(g.coordinates(La.generator("a01")), DomainError);
  EXPECT_THROW(g.coordinates(La.generator("a1")), DomainError);
}
