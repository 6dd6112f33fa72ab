#include <gtest/gtest.h>

#include "cdgl/errors.hpp"
#include "cdgl/simplex.hpp"

using namespace cdgl;

namespace {

void expect_passes(const CheckReport& r) {
  for (const auto& item : r.items) {
    EXPECT_TRUE(item.ok) << item.name << (item.residues.empty() ? "" : ": " + item.residues[0].generator + " -> " +
                                                                             to_string(item.residues[0].value));
  }
}

}  // namespace

TEST(Faces, OrderAndNames) {
  auto f = simplex_faces(2);
  ASSERT_EQ(f.size(), 7u);
  EXPECT_EQ(f[3], (Face{0, 1}));
  EXPECT_EQ(f[5], (Face{1, 2}));
  EXPECT_EQ(face_name({0, 1, 2}), "a012");
  EXPECT_EQ(face_name({3, 10}), "a3.10");
  EXPECT_EQ(parse_face_name("a3.10"), (Face{3, 10}));
  EXPECT_EQ(parse_face_name("a012"), (Face{0, 1, 2}));
  EXPECT_FALSE(parse_face_name("a021"));
  EXPECT_FALSE(parse_face_name("a3.4"));
  EXPECT_FALSE(parse_face_name("b01"));
  EXPECT_EQ(simplex_faces(4).size(), 31u);
}

TEST(Interval, LowLengthValues) {
  const int N = 6;
  auto ls = ls_interval(N);
  const auto& L = ls.dgl;
  auto a = L.generator("a0");
  auto b = L.generator("a1");
  auto x = L.generator("a01");
  EXPECT_TRUE(is_mc(L, a));
  EXPECT_TRUE(is_mc(L, b));
  EXPECT_EQ(L.diff(2).length_part(1), b - a);
  EXPECT_EQ(L.diff(2).length_part(2), Scalar(1, 2) * bracket(x, a + b));
  EXPECT_TRUE(check_d_squared(L).empty());
  EXPECT_EQ(L.diff(2), bracket(x, a) + bernoulli_op(-x, b - a));
  expect_passes(check_model_axioms(ls));
}

TEST(Interval, EdgeGaugesEndpoint) {
  auto ls = ls_interval(6);
  const auto& L = ls.dgl;
  EXPECT_EQ(gauge(L, L.generator("a01"), L.generator("a1")), L.generator("a0"));
}

TEST(Interval, IntertwiningAndSubdivision) {
  EXPECT_TRUE(ls_intertwining_residues(5).empty());
  auto s = subdivision_morphism(5);
  EXPECT_TRUE(check_d_squared(s.target).empty());
  EXPECT_TRUE(chain_map_residues(s.gamma, s.source, s.target).empty());
}

TEST(Triangle, TwistedTopIsProduct) {
  const int N = 5;
  auto t = triangle_model(N);
  const auto& L = t.dgl;
  auto La0 = twist(L, L.generator("a0"));
  EXPECT_EQ(La0.diff(L.alphabet()->index("a012")),
            bch({L.generator("a01"), L.generator("a12"), -L.generator("a02")}));
  EXPECT_EQ(L.diff(L.alphabet()->index("a012")).length_part(1),
            L.generator("a12") - L.generator("a02") + L.generator("a01"));
  expect_passes(check_model_axioms(t));
}

TEST(Tetrahedron, Axioms) { expect_passes(check_model_axioms(tetra_model(4))); }

TEST(Inductive, AxiomsAndBoundaryCondition) {
  for (auto [n, N] : {std::pair{2, 5}, {3, 4}, {4, 3}}) {
    auto m = build_model(n, N, Flavor::inductive);
    expect_passes(check_model_axioms(m));
    const auto& L = m.dgl;
    auto La0 = twist(L, L.generator("a0"));
    Face top(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) top[static_cast<std::size_t>(i)] = i;
    for (const auto& t : La0.diff_tensor(L.alphabet()->index(face_name(top)))) {
      for (Letter l : t.word.letters()) EXPECT_NE((*L.alphabet())[l].name, face_name(top)) << "n=" << n;
    }
  }
}

TEST(Seed, FourSimplexUsesInductiveStep) { expect_passes(check_model_axioms(build_model(4, 3))); }

TEST(Symmetric, EquivariantAndAxioms) {
  for (int n = 0; n <= 3; ++n) {
    auto m = build_symmetric_model(n, 3);
    EXPECT_TRUE(equivariance_residues(m).empty()) << "n=" << n;
    expect_passes(check_model_axioms(m));
  }
}

TEST(Symmetric, CosimplicialIdentities) {
  std::vector<SimplexModel> family;
  for (int n = 0; n <= 3; ++n) family.push_back(build_symmetric_model(n, 3));
  auto report = check_cosimplicial_identities(family);
  EXPECT_GT(report.items.size(), 20u);
  expect_passes(report);
}

TEST(Symmetric, CodegeneraciesNeedSymmetricModels) {
  auto lower = build_model(1, 3);
  auto upper = build_model(2, 3);
  EXPECT_THROW(codegeneracy(0, upper, lower), DomainError);
  EXPECT_NO_THROW(coface(0, lower, upper));
  EXPECT_THROW(coface(3, lower, upper), DomainError);
}

TEST(Invariants, OnlyTheBarycentreSurvives) {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& h : invariant_linear_homology(n, 3)) {
      const int want = (h.degree == -1 && h.length == 1) ? 1 : 0;
      EXPECT_EQ(h.dim(), want) << "n=" << n << " degree " << h.degree << " length " << h.length;
    }
  }
}

TEST(Barycentre, IsMaurerCartan) {
  for (int n = 0; n <= 3; ++n) {
    auto m = build_symmetric_model(n, 4);
    const auto& L = m.dgl;
    auto u = barycentric_mc(m);
    EXPECT_TRUE(is_mc(L, u)) << "n=" << n;
    LieElement avg = L.zero();
    for (int i = 0; i <= n; ++i) avg += L.generator(face_name({i}));
    EXPECT_EQ(u.length_part(1), Scalar(Scalar(1) / (n + 1)) * avg);
  }
}

TEST(Barycentre, TwistedDifferentialKeepsBoundary) {
  for (auto flavor : {Flavor::seed, Flavor::inductive, Flavor::symmetric}) {
    for (int n = 2; n <= 3; ++n) {
      auto m = build_model(n, 4, flavor);
      auto escapes = boundary_escape(m, barycentric_mc(m));
      ASSERT_EQ(escapes.size(), 1u) << to_string(flavor) << " n=" << n;
      EXPECT_EQ(escapes[0].generator, face_name(simplex_faces(n).back()));
    }
  }
  auto interval = build_symmetric_model(1, 4);
  EXPECT_GT(boundary_escape(interval, barycentric_mc(interval)).size(), 1u);
}

TEST(Faces, RestrictionIsLowerModel) {
  for (auto flavor : {Flavor::seed, Flavor::inductive, Flavor::symmetric}) {
    auto m = build_model(3, 3, flavor);
    for (const auto& f : simplex_faces(3)) {
      const int k = static_cast<int>(f.size()) - 1;
      EXPECT_EQ(restrict_to_face(m, f).diff_table(), build_model(k, 3, flavor).dgl.diff_table())
          << to_string(flavor) << " " << face_name(f);
    }
  }
}

TEST(Axioms, DetectsNegatedLinearPart) {
  auto m = triangle_model(4);
  std::vector<TensorElement> diff = m.dgl.diff_table();
  const Letter e = m.dgl.alphabet()->index("a01");
  diff[e] = -diff[e];
  SimplexModel broken{m.n, m.flavor, m.tops, FreeCompleteDGL(m.dgl.alphabet(), 4, diff)};
  auto report = check_model_axioms(broken);
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(report.items[1].ok);
  EXPECT_EQ(report.items[1].name, "linear-part");
}

TEST(SolveBoundary, InvertsTheDifferential) {
  auto t = triangle_model(4);
  const auto& L = t.dgl;
  auto target = apply_differential(L, bracket(L.generator("a01"), L.generator("a12")));
  auto beta = solve_boundary(L, target);
  EXPECT_EQ(apply_differential(L, beta), target);
  auto a0 = L.generator("a0");
  EXPECT_THROW(solve_boundary(L, a0), NoSolutionError);
}

TEST(Transgression, BoundaryIsProduct) {
  auto m = tetra_model(4);
  auto La0 = twist(m.dgl, m.dgl.generator("a0"));
  std::vector<LieElement> es = {La0.generator("a012"), La0.generator("a023"), -La0.generator("a013")};
  auto B = bch_transgression(La0, es);
  EXPECT_EQ(B.length_part(1), es[0] + es[1] + es[2]);
  std::vector<LieElement> des;
  for (const auto& e : es) des.push_back(apply_differential(La0, e));
  EXPECT_EQ(apply_differential(La0, B), bch(des));
}
