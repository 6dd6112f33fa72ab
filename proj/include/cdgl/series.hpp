#pragma once

#include <vector>

#include "cdgl/dgl.hpp"

namespace cdgl {

/// Bernoulli numbers B_0..B_n, first kind (B_1 = -1/2).
class BernoulliTable {
 public:
  explicit BernoulliTable(int n);

  const Scalar& operator[](int i) const { return values_.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<Scalar> values_;
};

/// Throws DomainError unless x is zero or homogeneous of the given degree.
void require_degree(const LieElement& x, int degree, const char* what);

/// sum_n coeffs[n] ad_x^n(v), stopping at the truncation.
LieElement ad_series(const LieElement& x, const LieElement& v, const std::vector<Scalar>& coeffs);

/// log(exp(x) exp(y)) in the truncated tensor algebra. Degree 0 only.
LieElement bch(const LieElement& x, const LieElement& y);
/// x_1 * x_2 * ... * x_k; the empty product is not allowed.
LieElement bch(const std::vector<LieElement>& xs);

/// e^{ad_x}(v).
LieElement exp_ad(const LieElement& x, const LieElement& v);

/// ad_x / (e^{ad_x} - 1) applied to v.
LieElement bernoulli_op(const LieElement& x, const LieElement& v);

/// (e^{ad_x} - 1) / ad_x applied to v.
LieElement exp_ad_quotient(const LieElement& x, const LieElement& v);

bool is_mc(const FreeCompleteDGL& L, const LieElement& a);

/// x G a = e^{ad_x}(a) - ((e^{ad_x} - 1)/ad_x)(dx). Throws DomainError if a is not MC.
LieElement gauge(const FreeCompleteDGL& L, const LieElement& x, const LieElement& a);

/// (L, d + ad_a). Throws DomainError if a is not MC.
FreeCompleteDGL twist(const FreeCompleteDGL& L, const LieElement& a);

}  // namespace cdgl
