#include "cdgl/series.hpp"

#include <stdexcept>

#include "cdgl/errors.hpp"

namespace cdgl {

BernoulliTable::BernoulliTable(int n) {
  values_.push_back(1);
  for (int m = 1; m <= n; ++m) {
    Scalar s = 0;
    for (int j = 0; j < m; ++j) s += binomial(m + 1, j) * values_[static_cast<std::size_t>(j)];
    values_.push_back(-s / (m + 1));
  }
}

void require_degree(const LieElement& x, int degree, const char* what) {
  if (!x.is_homogeneous()) throw DomainError(std::string(what) + ": element is not homogeneous");
  const auto d = x.degree();
  if (d && *d != degree) {
    throw DomainError(std::string(what) + ": expected degree " + std::to_string(degree) + ", got " +
                      std::to_string(*d));
  }
}

LieElement ad_series(const LieElement& x, const LieElement& v, const std::vector<Scalar>& coeffs) {
  require_compatible(x, v);
  const Alphabet& alphabet = *x.alphabet();
  const int N = x.truncation();
  TensorElement out;
  TensorElement power = v.tensor();
  for (std::size_t n = 0; n < coeffs.size() && !power.is_zero(); ++n) {
    if (coeffs[n] != 0) add_scaled(out, coeffs[n], power);
    power = tensor_bracket(alphabet, x.tensor(), power, N);
  }
  return LieElement(x.alphabet(), N, std::move(out));
}

namespace {

// exp(x) - 1 in the truncated tensor algebra.
TensorElement exp_minus_one(const TensorElement& x, int N) {
  TensorElement out;
  TensorElement power = x;
  for (int k = 1; !power.is_zero(); ++k) {
    add_scaled(out, 1 / factorial(k), power);
    power = multiply(power, x, N);
  }
  return out;
}

// log(1 + p) for p without constant term.
TensorElement log_one_plus(const TensorElement& p, int N) {
  TensorElement out;
  TensorElement power = p;
  for (int k = 1; !power.is_zero(); ++k) {
    add_scaled(out, Scalar(k % 2 == 1 ? 1 : -1) / k, power);
    power = multiply(power, p, N);
  }
  return out;
}

std::vector<Scalar> exp_coefficients(int n) {
  std::vector<Scalar> c;
  for (int i = 0; i <= n; ++i) c.push_back(1 / factorial(i));
  return c;
}

}  // namespace

LieElement bch(const std::vector<LieElement>& xs) {
  if (xs.empty()) throw DomainError("bch of an empty list");
  const int N = xs.front().truncation();
  TensorElement p;
  for (const auto& x : xs) {
    require_compatible(xs.front(), x);
    require_degree(x, 0, "bch");
    const TensorElement e = exp_minus_one(x.tensor(), N);
    TensorElement next = p + e;
    add_scaled(next, 1, multiply(p, e, N));
    p = std::move(next);
  }
  TensorElement z = log_one_plus(p, N);
  if (!dynkin_verify(*xs.front().alphabet(), z).ok) throw std::logic_error("bch produced a non-Lie element");
  return LieElement(xs.front().alphabet(), N, std::move(z));
}

LieElement bch(const LieElement& x, const LieElement& y) { return bch(std::vector<LieElement>{x, y}); }

LieElement exp_ad(const LieElement& x, const LieElement& v) {
  require_degree(x, 0, "exp_ad");
  return ad_series(x, v, exp_coefficients(x.truncation()));
}

LieElement bernoulli_op(const LieElement& x, const LieElement& v) {
  require_degree(x, 0, "bernoulli_op");
  const BernoulliTable b(x.truncation());
  std::vector<Scalar> c;
  for (int n = 0; n < b.size(); ++n) c.push_back(b[n] / factorial(n));
  return ad_series(x, v, c);
}

LieElement exp_ad_quotient(const LieElement& x, const LieElement& v) {
  require_degree(x, 0, "exp_ad_quotient");
  std::vector<Scalar> c;
  for (int n = 0; n <= x.truncation(); ++n) c.push_back(1 / factorial(n + 1));
  return ad_series(x, v, c);
}

bool is_mc(const FreeCompleteDGL& L, const LieElement& a) {
  require_member(L, a);
  require_degree(a, -1, "is_mc");
  return (apply_differential(L, a) + Scalar(1, 2) * bracket(a, a)).is_zero();
}

LieElement gauge(const FreeCompleteDGL& L, const LieElement& x, const LieElement& a) {
  require_member(L, x);
  require_degree(x, 0, "gauge");
  if (!is_mc(L, a)) throw DomainError("gauge: element is not Maurer-Cartan");
  return exp_ad(x, a) - exp_ad_quotient(x, apply_differential(L, x));
}

FreeCompleteDGL twist(const FreeCompleteDGL& L, const LieElement& a) {
  if (!is_mc(L, a)) throw DomainError("twist: element is not Maurer-Cartan");
  std::vector<TensorElement> diff;
  for (int g = 0; g < L.size(); ++g) {
    const Letter l = static_cast<Letter>(g);
    diff.push_back((L.diff(l) + bracket(a, L.generator(l))).tensor());
  }
  return FreeCompleteDGL(L.alphabet(), L.truncation(), std::move(diff));
}

}  // namespace cdgl
