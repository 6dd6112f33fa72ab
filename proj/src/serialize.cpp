#include "cdgl/serialize.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "cdgl/errors.hpp"

namespace cdgl {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const AlphabetPtr& alphabet, int truncation, std::string_view text, int line)
      : alphabet_(alphabet), truncation_(truncation), text_(text), line_(line) {}

  LieElement parse() {
    LieElement x = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1), line_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  LieElement sum() {
    LieElement acc(alphabet_, truncation_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    while (true) {
      LieElement t = term();
      if (negate) {
        acc -= t;
      } else {
        acc += t;
      }
      if (accept('+')) {
        negate = false;
      } else if (accept('-')) {
        negate = true;
      } else {
        return acc;
      }
    }
  }

  LieElement term() {
    if (accept('-')) return -term();
    skip_space();
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) return atom();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
    Scalar c;
    try {
      c = parse_scalar(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      pos_ = start;
      fail(e.what());
    }
    accept('*');
    skip_space();
    const bool operand = pos_ < text_.size() && (text_[pos_] == '[' || text_[pos_] == '(' || text_[pos_] == '_' ||
                                                 std::isalpha(static_cast<unsigned char>(text_[pos_])));
    if (!operand) {
      if (c == 0) return LieElement(alphabet_, truncation_);
      fail("a scalar needs a generator or bracket");
    }
    return c * atom();
  }

  LieElement atom() {
    skip_space();
    if (accept('[')) {
      LieElement x = sum();
      expect(',');
      LieElement y = sum();
      expect(']');
      return bracket(x, y);
    }
    if (accept('(')) {
      LieElement x = sum();
      expect(')');
      return x;
    }
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                     text_[pos_] == '.')) {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected a generator, '[' or '('");
    const std::string name(text_.substr(start, pos_ - start));
    auto l = alphabet_->find(name);
    if (!l) {
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    return LieElement::generator(alphabet_, truncation_, *l);
  }

  const AlphabetPtr& alphabet_;
  int truncation_;
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

int parse_int(const std::string& s, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError("expected an integer, got '" + s + "'", line);
  return v;
}

std::string emit_terms(const LieElement& x, const char* prefix) {
  std::string out;
  for (const auto& t : left_normed_terms(*x.alphabet(), x.tensor())) {
    out += prefix;
    out += to_string(t.coeff) + " " + bracket_notation(*x.alphabet(), t.word) + "\n";
  }
  return out;
}

}  // namespace

LieElement parse_element(const AlphabetPtr& alphabet, int truncation, const std::string& text) {
  return ExpressionParser(alphabet, truncation, text, 0).parse();
}

std::string emit_element(const LieElement& x) {
  if (x.is_zero()) return "0\n";
  return emit_terms(x, "");
}

std::string emit_model(const ModelFile& model) {
  const auto& L = model.dgl;
  std::string out = "cdgl-dgl 1\n";
  if (model.simplex) out += "simplex " + std::to_string(*model.simplex) + "\n";
  if (model.flavor) out += "flavor " + to_string(*model.flavor) + "\n";
  out += "truncation " + std::to_string(L.truncation()) + "\n";
  for (const auto& g : L.alphabet()->generators()) out += "generator " + g.name + " " + std::to_string(g.degree) + "\n";
  for (int g = 0; g < L.size(); ++g) {
    out += "diff " + (*L.alphabet())[static_cast<Letter>(g)].name + "\n";
    out += emit_terms(L.diff(static_cast<Letter>(g)), "term ");
  }
  out += "end\n";
  return out;
}

std::string emit_model(const SimplexModel& model) { return emit_model(ModelFile{model.n, model.flavor, model.dgl}); }

ModelFile parse_model(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool header = false;
  bool ended = false;
  std::optional<int> simplex;
  std::optional<Flavor> flavor;
  std::optional<int> truncation;
  std::vector<Generator> gens;
  AlphabetPtr alphabet;
  std::map<std::string, LieElement> table;
  std::string current;

  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string content = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto words = split(content);
    if (words.empty()) continue;
    if (ended) throw ParseError("content after 'end'", line);
    const std::string& key = words[0];
    if (!header) {
      if (words.size() != 2 || key != "cdgl-dgl") throw ParseError("expected header 'cdgl-dgl 1'", line);
      if (words[1] != "1") throw ParseError("unsupported format version " + words[1], line);
      header = true;
      continue;
    }
    if (key == "end") {
      if (words.size() != 1) throw ParseError("trailing text after 'end'", line);
      ended = true;
    } else if (key == "simplex" || key == "truncation") {
      if (words.size() != 2) throw ParseError("'" + key + "' takes one value", line);
      if (alphabet) throw ParseError("'" + key + "' after the first diff", line);
      const int v = parse_int(words[1], line);
      auto& slot = key == "simplex" ? simplex : truncation;
      if (slot) throw ParseError("duplicate '" + key + "'", line);
      slot = v;
    } else if (key == "flavor") {
      if (words.size() != 2) throw ParseError("'flavor' takes one value", line);
      if (flavor) throw ParseError("duplicate 'flavor'", line);
      flavor = parse_flavor(words[1]);
      if (!flavor) throw ParseError("unknown flavor '" + words[1] + "'", line);
    } else if (key == "generator") {
      if (words.size() != 3) throw ParseError("expected 'generator <name> <degree>'", line);
      if (alphabet) throw ParseError("generator after the first diff", line);
      gens.push_back({words[1], parse_int(words[2], line)});
    } else if (key == "diff") {
      if (words.size() != 2) throw ParseError("expected 'diff <name>'", line);
      if (!truncation) throw ParseError("missing 'truncation' before the differential", line);
      if (!alphabet) {
        try {
          alphabet = make_alphabet(gens);
          LieElement(alphabet, *truncation);
        } catch (const ConfigurationError& e) {
          throw ParseError(e.what(), line);
        }
      }
      if (!alphabet->find(words[1])) throw ParseError("diff of unknown generator '" + words[1] + "'", line);
      if (table.count(words[1])) throw ParseError("duplicate diff of '" + words[1] + "'", line);
      current = words[1];
      table.emplace(current, LieElement(alphabet, *truncation));
    } else if (key == "term") {
      if (current.empty()) throw ParseError("term outside a diff block", line);
      const auto at = content.find("term") + 4;
      const auto rest = content.substr(at);
      auto value = ExpressionParser(alphabet, *truncation, rest, line).parse();
      table.at(current) += value;
    } else {
      throw ParseError("unknown keyword '" + key + "'", line);
    }
  }
  if (!header) throw ParseError("empty input", 0);
  if (!ended) throw ParseError("missing 'end'", line);
  if (!truncation) throw ParseError("missing 'truncation'", line);
  if (!alphabet) {
    try {
      alphabet = make_alphabet(gens);
    } catch (const ConfigurationError& e) {
      throw ParseError(e.what(), line);
    }
  }
  try {
    return ModelFile{simplex, flavor, FreeCompleteDGL::from_table(alphabet, *truncation, table)};
  } catch (const ConfigurationError& e) {
    throw ParseError(e.what(), line);
  }
}

SimplexModel to_simplex_model(const ModelFile& model) {
  if (!model.simplex) throw StructuralError("model file does not describe a simplex");
  const int n = *model.simplex;
  if (n < 0) throw StructuralError("negative simplex dimension");
  const auto& L = model.dgl;
  if (!(*L.alphabet() == *simplex_alphabet(n))) {
    throw StructuralError("generators do not match the faces of the " + std::to_string(n) + "-simplex");
  }
  std::vector<TensorElement> tops;
  for (int p = 0; p <= n; ++p) {
    auto sub = simplex_alphabet(p);
    std::vector<Letter> map(static_cast<std::size_t>(L.size()), static_cast<Letter>(-1));
    for (int g = 0; g < sub->size(); ++g) map[L.alphabet()->index((*sub)[static_cast<Letter>(g)].name)] = static_cast<Letter>(g);
    Face top(static_cast<std::size_t>(p + 1));
    for (int i = 0; i <= p; ++i) top[static_cast<std::size_t>(i)] = i;
    const auto& d = L.diff_tensor(L.alphabet()->index(face_name(top)));
    for (const auto& t : d) {
      for (Letter l : t.word.letters()) {
        if (map[l] == static_cast<Letter>(-1)) throw StructuralError("differential of " + face_name(top) + " leaves its face");
      }
    }
    tops.push_back(substitute(d, map));
  }
  return SimplexModel{n, model.flavor.value_or(Flavor::seed), std::move(tops), L};
}

}  // namespace cdgl
