#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdgl/scalar.hpp"
#include "cdgl/simplex.hpp"

namespace cdgl {

/// t_1^{e_1}...t_n^{e_n} dt_{j_1}...dt_{j_k}, j_1 < ... < j_k. Bit j-1 of
/// `dts` stands for dt_j; t_0 and dt_0 never occur.
struct Monomial {
  std::vector<int> exps;
  unsigned dts = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial form on Delta^n with t_0 = 1 - sum t_i and dt_0 = -sum dt_i
/// substituted away.
class PolyForm {
 public:
  explicit PolyForm(int n);

  static PolyForm constant(int n, const Scalar& c);
  /// t_i, 0 <= i <= n.
  static PolyForm t(int n, int i);
  /// dt_i, 0 <= i <= n.
  static PolyForm dt(int n, int i);

  int n() const { return n_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Monomial& m, const Scalar& c);

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Scalar& s, const PolyForm& a);
  friend bool operator==(const PolyForm&, const PolyForm&) = default;

 private:
  int n_;
  std::map<Monomial, Scalar> terms_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm exterior_d(const PolyForm& a);

/// Pullback along the monotone inclusion Delta^k -> Delta^n, j -> face[j].
PolyForm pullback(const PolyForm& a, const Face& face);

/// k! sum_j (-1)^j t_{i_j} dt_{i_0}..^..dt_{i_k} for distinct indices in any order.
PolyForm elementary_form(const Face& indices, int n);

/// Coefficients on the basis alpha_F of C*(Delta^n), F increasing.
using Cochain = std::map<Face, Scalar>;

/// (delta c)_G = sum over q in G of (-1)^{position of q} c_{G - q}.
Cochain coboundary(const Cochain& c, int n);
PolyForm whitney_i(const Cochain& c, int n);
/// Integral over the face F in its coordinates t_{i_1}..t_{i_k}.
Scalar integrate_face(const PolyForm& a, const Face& face);
Cochain integrate_p(const PolyForm& a, int n);

std::string to_string(const PolyForm& a);
std::string to_string(const Cochain& c);

struct IdentityResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  bool ok() const { return failures == 0; }
};

/// p i = id, d i = i delta, p d = delta p, d^2 = 0, Leibniz, graded
/// commutativity, d w_F = sum_q w_{qF}, I_F(w_F) = 1, w_{0..n} = n! dt_1..dt_n
/// and the face restrictions of the w_F, on Delta^n.
std::vector<IdentityResult> whitney_identity_suite(int n);

}  // namespace cdgl
