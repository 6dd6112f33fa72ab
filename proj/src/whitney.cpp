#include "cdgl/whitney.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "cdgl/errors.hpp"

namespace cdgl {

namespace {

void require_dimension(int n) {
  if (n < 0) throw DomainError("simplex dimension must be >= 0");
}

void require_same(const PolyForm& a, const PolyForm& b) {
  if (a.n() != b.n()) throw ConfigurationError("forms live on simplices of different dimensions");
}

// Sign of dt_A ^ dt_B rewritten in increasing order, 0 when they overlap.
int merge_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  int swaps = 0;
  for (unsigned rest = b; rest; rest &= rest - 1) {
    const unsigned bit = rest & -rest;
    swaps += std::popcount(a & ~(bit | (bit - 1)));
  }
  return swaps % 2 ? -1 : 1;
}

}  // namespace

PolyForm::PolyForm(int n) : n_(n) { require_dimension(n); }

PolyForm PolyForm::constant(int n, const Scalar& c) {
  PolyForm out(n);
  out.add(Monomial{std::vector<int>(static_cast<std::size_t>(n)), 0}, c);
  return out;
}

PolyForm PolyForm::t(int n, int i) {
  if (i < 0 || i > n) throw DomainError("t_" + std::to_string(i) + " is not a coordinate of Delta^" + std::to_string(n));
  if (i == 0) {
    PolyForm out = constant(n, 1);
    for (int j = 1; j <= n; ++j) out -= t(n, j);
    return out;
  }
  PolyForm out(n);
  Monomial m{std::vector<int>(static_cast<std::size_t>(n)), 0};
  m.exps[static_cast<std::size_t>(i - 1)] = 1;
  out.add(m, 1);
  return out;
}

PolyForm PolyForm::dt(int n, int i) {
  if (i < 0 || i > n) throw DomainError("dt_" + std::to_string(i) + " is not a coordinate of Delta^" + std::to_string(n));
  if (i == 0) {
    PolyForm out(n);
    for (int j = 1; j <= n; ++j) out -= dt(n, j);
    return out;
  }
  PolyForm out(n);
  out.add(Monomial{std::vector<int>(static_cast<std::size_t>(n)), 1u << (i - 1)}, 1);
  return out;
}

void PolyForm::add(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

PolyForm operator*(const Scalar& s, const PolyForm& a) {
  PolyForm out(a.n());
  if (s == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, s * c);
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  require_same(a, b);
  PolyForm out(a.n());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int sign = merge_sign(ma.dts, mb.dts);
      if (sign == 0) continue;
      Monomial m{ma.exps, ma.dts | mb.dts};
      for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += mb.exps[i];
      out.add(m, sign * ca * cb);
    }
  }
  return out;
}

PolyForm exterior_d(const PolyForm& a) {
  PolyForm out(a.n());
  for (const auto& [m, c] : a.terms()) {
    for (int j = 1; j <= a.n(); ++j) {
      const int e = m.exps[static_cast<std::size_t>(j - 1)];
      const unsigned bit = 1u << (j - 1);
      if (e == 0 || (m.dts & bit)) continue;
      Monomial dm{m.exps, m.dts | bit};
      --dm.exps[static_cast<std::size_t>(j - 1)];
      out.add(dm, merge_sign(bit, m.dts) * e * c);
    }
  }
  return out;
}

PolyForm pullback(const PolyForm& a, const Face& face) {
  if (face.empty()) throw DomainError("empty face");
  for (std::size_t j = 0; j < face.size(); ++j) {
    if (face[j] < 0 || face[j] > a.n() || (j > 0 && face[j] <= face[j - 1])) {
      throw DomainError("not an increasing face of Delta^" + std::to_string(a.n()));
    }
  }
  const int k = static_cast<int>(face.size()) - 1;
  std::vector<PolyForm> ts(static_cast<std::size_t>(a.n() + 1), PolyForm(k));
  std::vector<PolyForm> dts(static_cast<std::size_t>(a.n() + 1), PolyForm(k));
  for (int j = 0; j <= k; ++j) {
    ts[static_cast<std::size_t>(face[static_cast<std::size_t>(j)])] = PolyForm::t(k, j);
    dts[static_cast<std::size_t>(face[static_cast<std::size_t>(j)])] = PolyForm::dt(k, j);
  }
  PolyForm out(k);
  for (const auto& [m, c] : a.terms()) {
    PolyForm term = PolyForm::constant(k, c);
    for (int i = 1; i <= a.n(); ++i) {
      for (int e = 0; e < m.exps[static_cast<std::size_t>(i - 1)]; ++e) term = wedge(term, ts[static_cast<std::size_t>(i)]);
      if (term.is_zero()) break;
    }
    for (int i = 1; i <= a.n() && !term.is_zero(); ++i) {
      if (m.dts & (1u << (i - 1))) term = wedge(term, dts[static_cast<std::size_t>(i)]);
    }
    out += term;
  }
  return out;
}

PolyForm elementary_form(const Face& indices, int n) {
  require_dimension(n);
  if (indices.empty()) throw DomainError("elementary form needs at least one index");
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] < 0 || indices[j] > n) throw DomainError("index out of range for Delta^" + std::to_string(n));
    if (std::count(indices.begin(), indices.end(), indices[j]) > 1) throw DomainError("repeated index");
  }
  const int k = static_cast<int>(indices.size()) - 1;
  PolyForm out(n);
  for (int j = 0; j <= k; ++j) {
    PolyForm term = PolyForm::t(n, indices[static_cast<std::size_t>(j)]);
    for (int l = 0; l <= k; ++l) {
      if (l != j) term = wedge(term, PolyForm::dt(n, indices[static_cast<std::size_t>(l)]));
    }
    out += Scalar(j % 2 ? -1 : 1) * term;
  }
  return factorial(k) * out;
}

namespace {

void require_face(const Face& f, int n) {
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j] < 0 || f[j] > n || (j > 0 && f[j] <= f[j - 1])) {
      throw DomainError("cochain support is not an increasing face of Delta^" + std::to_string(n));
    }
  }
}

}  // namespace

Cochain coboundary(const Cochain& c, int n) {
  Cochain out;
  for (const auto& [f, v] : c) {
    require_face(f, n);
    for (int q = 0; q <= n; ++q) {
      if (std::binary_search(f.begin(), f.end(), q)) continue;
      Face g = f;
      const auto pos = std::lower_bound(g.begin(), g.end(), q) - g.begin();
      g.insert(g.begin() + pos, q);
      auto& slot = out[g];
      slot += pos % 2 ? -v : v;
      if (slot == 0) out.erase(g);
    }
  }
  return out;
}

PolyForm whitney_i(const Cochain& c, int n) {
  PolyForm out(n);
  for (const auto& [f, v] : c) {
    require_face(f, n);
    out += v * elementary_form(f, n);
  }
  return out;
}

Scalar integrate_face(const PolyForm& a, const Face& face) {
  const PolyForm restricted = pullback(a, face);
  const int k = static_cast<int>(face.size()) - 1;
  const unsigned top = k == 0 ? 0u : (1u << k) - 1;
  Scalar out = 0;
  for (const auto& [m, c] : restricted.terms()) {
    if (m.dts != top) continue;
    Scalar v = c;
    int total = k;
    for (int e : m.exps) {
      v *= factorial(e);
      total += e;
    }
    out += v / factorial(total);
  }
  return out;
}

Cochain integrate_p(const PolyForm& a, int n) {
  if (a.n() != n) throw ConfigurationError("form does not live on Delta^" + std::to_string(n));
  Cochain out;
  for (const auto& f : simplex_faces(n)) {
    const Scalar v = integrate_face(a, f);
    if (v != 0) out.emplace(f, v);
  }
  return out;
}

std::string to_string(const PolyForm& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) out << " + ";
    first = false;
    out << to_string(c);
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.exps[i] == 1) out << " t" << i + 1;
      if (m.exps[i] > 1) out << " t" << i + 1 << "^" << m.exps[i];
    }
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
      if (m.dts & (1u << i)) out << " dt" << i + 1;
    }
  }
  return out.str();
}

std::string to_string(const Cochain& c) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [f, v] : c) {
    if (!first) out << " + ";
    first = false;
    out << to_string(v) << " alpha" << face_name(f).substr(1);
  }
  return out.str();
}

namespace {

std::vector<PolyForm> sample_forms(int n, int max_exp) {
  std::vector<PolyForm> out;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  while (true) {
    for (unsigned s = 0; s < (1u << n); ++s) {
      PolyForm f(n);
      f.add(Monomial{e, s}, 1);
      out.push_back(std::move(f));
    }
    std::size_t i = 0;
    while (i < e.size() && ++e[i] > max_exp) e[i++] = 0;
    if (i == e.size()) break;
  }
  return out;
}

int degree_of(const PolyForm& a) { return a.is_zero() ? 0 : std::popcount(a.terms().begin()->first.dts); }

}  // namespace

std::vector<IdentityResult> whitney_identity_suite(int n) {
  require_dimension(n);
  std::vector<IdentityResult> out;
  auto check = [&](const std::string& name, bool ok) {
    auto it = std::find_if(out.begin(), out.end(), [&](const IdentityResult& r) { return r.name == name; });
    if (it == out.end()) it = out.insert(out.end(), {name, 0, 0});
    ++it->cases;
    if (!ok) ++it->failures;
  };
  const auto faces = simplex_faces(n);
  for (const auto& f : faces) {
    const Cochain alpha{{f, 1}};
    check("p-after-i", integrate_p(whitney_i(alpha, n), n) == alpha);
  }
  for (const auto& f : faces) {
    const Cochain alpha{{f, 1}};
    check("i-chain-map", exterior_d(whitney_i(alpha, n)) == whitney_i(coboundary(alpha, n), n));
  }
  for (const auto& f : faces) {
    PolyForm sum(n);
    for (int q = 0; q <= n; ++q) {
      if (std::find(f.begin(), f.end(), q) != f.end()) continue;
      Face qf{q};
      qf.insert(qf.end(), f.begin(), f.end());
      sum += elementary_form(qf, n);
    }
    check("d-elementary", exterior_d(elementary_form(f, n)) == sum);
  }
  for (const auto& f : faces) check("integral-elementary", integrate_face(elementary_form(f, n), f) == 1);
  {
    PolyForm top = PolyForm::constant(n, factorial(n));
    for (int j = 1; j <= n; ++j) top = wedge(top, PolyForm::dt(n, j));
    Face all(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) all[static_cast<std::size_t>(j)] = j;
    check("top-form", whitney_i({{all, 1}}, n) == top);
  }
  const auto forms = sample_forms(n, 2);
  for (const auto& w : forms) check("p-chain-map", integrate_p(exterior_d(w), n) == coboundary(integrate_p(w, n), n));
  for (const auto& w : forms) check("d-squared", exterior_d(exterior_d(w)).is_zero());
  for (std::size_t i = 0; i < forms.size(); i += 3) {
    for (std::size_t j = 0; j < forms.size(); j += 5) {
      const auto& a = forms[i];
      const auto& b = forms[j];
      const int p = degree_of(a);
      const Scalar sign = p % 2 ? -1 : 1;
      check("leibniz", exterior_d(wedge(a, b)) == wedge(exterior_d(a), b) + sign * wedge(a, exterior_d(b)));
      const Scalar swap = (p * degree_of(b)) % 2 ? -1 : 1;
      check("graded-commutative", wedge(a, b) == swap * wedge(b, a));
    }
  }
  for (int j = 0; j <= n && n > 0; ++j) {
    Face delta;
    for (int v = 0; v <= n; ++v) {
      if (v != j) delta.push_back(v);
    }
    for (const auto& f : faces) {
      const auto restricted = pullback(elementary_form(f, n), delta);
      if (std::find(f.begin(), f.end(), j) != f.end()) {
        check("face-restriction", restricted.is_zero());
      } else {
        Face g;
        for (int v : f) g.push_back(v < j ? v : v - 1);
        check("face-restriction", restricted == elementary_form(g, n - 1));
      }
    }
  }
  return out;
}

}  // namespace cdgl
