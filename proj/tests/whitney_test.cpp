#include <gtest/gtest.h>

#include "cdgl/errors.hpp"
#include "cdgl/whitney.hpp"

using namespace cdgl;

TEST(PolyForm, RelationsAreEliminated) {
  for (int n = 0; n <= 3; ++n) {
    PolyForm sum_t(n), sum_dt(n);
    for (int i = 0; i <= n; ++i) {
      sum_t += PolyForm::t(n, i);
      sum_dt += PolyForm::dt(n, i);
    }
    EXPECT_EQ(sum_t, PolyForm::constant(n, 1));
    EXPECT_TRUE(sum_dt.is_zero());
  }
  EXPECT_THROW(PolyForm::t(2, 3), DomainError);
  EXPECT_THROW(PolyForm::dt(2, -1), DomainError);
}

TEST(PolyForm, DerivativeOfCoordinates) {
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(exterior_d(PolyForm::t(3, i)), PolyForm::dt(3, i));
  for (int i = 0; i <= 3; ++i) EXPECT_TRUE(wedge(PolyForm::dt(3, i), PolyForm::dt(3, i)).is_zero());
  EXPECT_EQ(wedge(PolyForm::dt(2, 2), PolyForm::dt(2, 1)), Scalar(-1) * wedge(PolyForm::dt(2, 1), PolyForm::dt(2, 2)));
  // d(t1^2 t2) = 2 t1 t2 dt1 + t1^2 dt2
  const auto t1 = PolyForm::t(2, 1), t2 = PolyForm::t(2, 2);
  EXPECT_EQ(exterior_d(wedge(wedge(t1, t1), t2)),
            Scalar(2) * wedge(wedge(t1, t2), PolyForm::dt(2, 1)) + wedge(wedge(t1, t1), PolyForm::dt(2, 2)));
}

TEST(Whitney, VertexForms) {
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) EXPECT_EQ(elementary_form({i}, n), PolyForm::t(n, i));
}

TEST(Whitney, EdgeOnInterval) {
  EXPECT_EQ(elementary_form({0, 1}, 1), PolyForm::dt(1, 1));
  EXPECT_EQ(to_string(elementary_form({0, 1}, 1)), "1/1 dt1");
}

TEST(Whitney, TopForm) {
  for (int n = 1; n <= 3; ++n) {
    Face all;
    PolyForm top = PolyForm::constant(n, factorial(n));
    for (int j = 0; j <= n; ++j) all.push_back(j);
    for (int j = 1; j <= n; ++j) top = wedge(top, PolyForm::dt(n, j));
    EXPECT_EQ(whitney_i({{all, 1}}, n), top) << n;
  }
}

TEST(Whitney, DifferentialOfElementaryForms) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& f : simplex_faces(n)) {
      PolyForm sum(n);
      for (int q = 0; q <= n; ++q) {
        if (std::find(f.begin(), f.end(), q) != f.end()) continue;
        Face qf{q};
        qf.insert(qf.end(), f.begin(), f.end());
        sum += elementary_form(qf, n);
      }
      EXPECT_EQ(exterior_d(elementary_form(f, n)), sum);
    }
  }
}

TEST(Whitney, IntegralFormula) {
  // t1 dt1 on the interval integrates to 1!/2!
  EXPECT_EQ(integrate_p(wedge(PolyForm::t(1, 1), PolyForm::dt(1, 1)), 1), (Cochain{{{0, 1}, Scalar(1, 2)}}));
  // t1^2 t2 dt1 dt2 on the triangle: 2! 1! / 5!
  const auto t1 = PolyForm::t(2, 1), t2 = PolyForm::t(2, 2);
  auto w = wedge(wedge(wedge(wedge(t1, t1), t2), PolyForm::dt(2, 1)), PolyForm::dt(2, 2));
  EXPECT_EQ(integrate_face(w, {0, 1, 2}), Scalar(1, 60));
  EXPECT_EQ(integrate_face(PolyForm::t(2, 0), {0}), 1);
  EXPECT_EQ(integrate_face(PolyForm::t(2, 0), {1}), 0);
  for (int n = 0; n <= 3; ++n)
    for (const auto& f : simplex_faces(n)) EXPECT_EQ(integrate_face(elementary_form(f, n), f), 1);
}

TEST(Whitney, PAfterIIsIdentity) {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& f : simplex_faces(n)) {
      const Cochain alpha{{f, 1}};
      EXPECT_EQ(integrate_p(whitney_i(alpha, n), n), alpha);
    }
    Cochain mix;
    Scalar c = 1;
    for (const auto& f : simplex_faces(n)) mix[f] = c++ / 3;
    EXPECT_EQ(integrate_p(whitney_i(mix, n), n), mix);
  }
}

TEST(Whitney, IdentitySuite) {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& r : whitney_identity_suite(n)) {
      EXPECT_TRUE(r.ok()) << "n=" << n << " " << r.name << " " << r.failures << "/" << r.cases;
      EXPECT_GT(r.cases, 0);
    }
  }
}

TEST(Whitney, FaceRestrictionVanishes) {
  auto w = elementary_form({0, 2}, 3);
  EXPECT_TRUE(pullback(w, {0, 1, 3}).is_zero());
  EXPECT_TRUE(pullback(w, {1, 2, 3}).is_zero());
  EXPECT_EQ(pullback(w, {0, 2, 3}), elementary_form({0, 1}, 2));
  EXPECT_THROW(pullback(w, {2, 1}), DomainError);
}

TEST(Whitney, Errors) {
  EXPECT_THROW(elementary_form({0, 4}, 3), DomainError);
  EXPECT_THROW(elementary_form({1, 1}, 3), DomainError);
  EXPECT_THROW(whitney_i({{{1, 0}, 1}}, 2), DomainError);
  EXPECT_THROW(PolyForm(1) + PolyForm(2), ConfigurationError);
}
