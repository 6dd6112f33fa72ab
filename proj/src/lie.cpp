#include "cdgl/lie.hpp"

#include <algorithm>
#include <map>

#include "cdgl/errors.hpp"

namespace cdgl {

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  if (generators_.size() > 65535) throw ConfigurationError("too many generators");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.degree < -1) {
      throw ConfigurationError("generator '" + g.name + "' has degree " + std::to_string(g.degree) +
                               " (must be >= -1)");
    }
    if (g.name.empty()) throw ConfigurationError("empty generator name");
    if (!by_name_.emplace(g.name, static_cast<Letter>(i)).second) {
      throw ConfigurationError("duplicate generator name '" + g.name + "'");
    }
  }
}

int Alphabet::degree(const Word& w) const {
  int d = 0;
  for (Letter l : w.letters()) d += generators_[l].degree;
  return d;
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::index(const std::string& name) const {
  auto l = find(name);
  if (!l) throw StructuralError("unknown generator '" + name + "'");
  return *l;
}

AlphabetPtr make_alphabet(std::vector<Generator> generators) {
  return std::make_shared<const Alphabet>(std::move(generators));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

TensorElement tensor_bracket(const Alphabet& alphabet, const TensorElement& x, const TensorElement& y,
                             int max_length) {
  std::vector<Term> out;
  for (const auto& u : x) {
    const int room = max_length - u.word.size();
    if (room < 1) break;
    const int du = alphabet.degree(u.word);
    for (const auto& v : y) {
      if (v.word.size() > room) break;
      Scalar c = u.coeff * v.coeff;
      out.push_back({u.word * v.word, c});
      if (koszul(du, alphabet.degree(v.word)) > 0) c = -c;
      out.push_back({v.word * u.word, std::move(c)});
    }
  }
  return TensorElement::from_terms(std::move(out));
}

TensorElement left_normed(const Alphabet& alphabet, const Word& w) {
  TensorElement acc{Word(w[0])};
  for (int i = 1; i < w.size(); ++i) {
    acc = tensor_bracket(alphabet, acc, TensorElement(Word(w[i])), kMaxLength);
  }
  return acc;
}

LieElement::LieElement(AlphabetPtr alphabet, int truncation) : LieElement(std::move(alphabet), truncation, {}) {}

LieElement::LieElement(AlphabetPtr alphabet, int truncation, TensorElement tensor)
    : alphabet_(std::move(alphabet)), truncation_(truncation), tensor_(std::move(tensor)) {
  if (!alphabet_) throw ConfigurationError("Lie element without an alphabet");
  if (truncation_ < 1 || truncation_ > kMaxLength) {
    throw ConfigurationError("truncation must lie in [1, " + std::to_string(kMaxLength) + "]");
  }
  if (tensor_.max_length() > truncation_) tensor_ = tensor_.truncated(truncation_);
}

LieElement LieElement::generator(AlphabetPtr alphabet, int truncation, Letter letter) {
  if (letter >= alphabet->size()) throw StructuralError("generator index out of range");
  return LieElement(std::move(alphabet), truncation, TensorElement(Word(letter)));
}

LieElement LieElement::generator(AlphabetPtr alphabet, int truncation, const std::string& name) {
  const Letter l = alphabet->index(name);
  return generator(std::move(alphabet), truncation, l);
}

std::optional<int> LieElement::degree() const {
  if (tensor_.is_zero()) return std::nullopt;
  const int d = alphabet_->degree(tensor_.terms().front().word);
  for (const auto& t : tensor_) {
    if (alphabet_->degree(t.word) != d) throw DomainError("element is not homogeneous in degree");
  }
  return d;
}

bool LieElement::is_homogeneous() const {
  if (tensor_.is_zero()) return true;
  const int d = alphabet_->degree(tensor_.terms().front().word);
  return std::all_of(tensor_.begin(), tensor_.end(),
                     [&](const Term& t) { return alphabet_->degree(t.word) == d; });
}

LieElement LieElement::length_part(int k) const { return LieElement(alphabet_, truncation_, tensor_.length_part(k)); }

void require_compatible(const LieElement& a, const LieElement& b) {
  if (a.truncation() != b.truncation()) {
    throw ConfigurationError("mixed truncations " + std::to_string(a.truncation()) + " and " +
                             std::to_string(b.truncation()));
  }
  if (!same_alphabet(a.alphabet(), b.alphabet())) throw ConfigurationError("mismatched generator sets");
}

LieElement& LieElement::operator+=(const LieElement& other) {
  require_compatible(*this, other);
  tensor_ += other.tensor_;
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  require_compatible(*this, other);
  tensor_ -= other.tensor_;
  return *this;
}

LieElement& LieElement::operator*=(const Scalar& s) {
  tensor_ *= s;
  return *this;
}

bool operator==(const LieElement& a, const LieElement& b) {
  require_compatible(a, b);
  return a.tensor_ == b.tensor_;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  require_compatible(x, y);
  return LieElement(x.alphabet(), x.truncation(),
                    tensor_bracket(*x.alphabet(), x.tensor(), y.tensor(), x.truncation()));
}

LieElement truncate(const LieElement& x, int max_length) {
  if (max_length > x.truncation()) {
    throw ConfigurationError("cannot raise truncation from " + std::to_string(x.truncation()) + " to " +
                             std::to_string(max_length));
  }
  return LieElement(x.alphabet(), max_length, x.tensor().truncated(max_length));
}

DynkinReport dynkin_verify(const Alphabet& alphabet, const TensorElement& t) {
  DynkinReport report;
  for (int n = t.min_length(); n <= t.max_length() && !t.is_zero(); ++n) {
    const TensorElement part = t.length_part(n);
    if (part.is_zero()) continue;
    TensorElement theta;
    for (const auto& term : part) add_scaled(theta, term.coeff, left_normed(alphabet, term.word));
    if (!(theta == Scalar(n) * part)) {
      report.ok = false;
      report.failing_lengths.push_back(n);
    }
  }
  return report;
}

std::vector<BracketTerm> left_normed_terms(const Alphabet& alphabet, const TensorElement& t) {
  std::map<Word, Scalar> acc;
  for (const auto& term : t) {
    Word w = term.word;
    Scalar c = term.coeff / w.size();
    if (w.size() >= 2) {
      const Letter a = w[0];
      const Letter b = w[1];
      if (a == b && alphabet.degree(a) % 2 == 0) continue;
      if (b < a) {
        w.set(0, b);
        w.set(1, a);
        if (koszul(alphabet.degree(a), alphabet.degree(b)) > 0) c = -c;
      }
    }
    acc[w] += c;
  }
  std::vector<BracketTerm> out;
  for (auto& [w, c] : acc) {
    if (c != 0) out.push_back({c, w});
  }
  return out;
}

std::string bracket_notation(const Alphabet& alphabet, const Word& w) {
  std::string s = alphabet[w[0]].name;
  for (int i = 1; i < w.size(); ++i) s = "[" + s + "," + alphabet[w[i]].name + "]";
  return s;
}

std::string to_string(const LieElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& term : left_normed_terms(*x.alphabet(), x.tensor())) {
    if (!s.empty()) s += " + ";
    s += to_string(term.coeff) + " " + bracket_notation(*x.alphabet(), term.word);
  }
  return s;
}

}  // namespace cdgl
