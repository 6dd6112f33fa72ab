#include "cdgl/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cdgl/errors.hpp"
#include "cdgl/homology.hpp"
#include "cdgl/serialize.hpp"
#include "cdgl/whitney.hpp"

namespace cdgl::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

std::string inline_element(const LieElement& x) {
  std::string out;
  for (char c : emit_element(x)) out += c == '\n' ? std::string(" ; ") : std::string(1, c);
  return out.substr(0, out.size() - 3);
}

std::string coords_text(const MalcevQuotient::Coords& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + to_string(c[i]);
  return out + ")";
}

Flavor flavor_of(const std::string& s) {
  auto f = parse_flavor(s);
  if (!f) throw UsageError("unknown flavor '" + s + "'");
  return *f;
}

void print_report(const CheckReport& report, std::ostream& out) {
  for (const auto& item : report.items) {
    out << "item " << item.name << " " << (item.ok ? "ok" : "FAIL") << "\n";
    for (const auto& r : item.residues) out << "  residue " << r.generator << ": " << inline_element(r.value) << "\n";
  }
  out << "result " << (report.ok() ? "ok" : "FAIL") << "\n";
}

AlphabetPtr parse_generators(const std::string& list) {
  std::vector<Generator> gens;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("generator '" + item + "' needs the form name:degree");
    try {
      gens.push_back({item.substr(0, colon), std::stoi(item.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw UsageError("bad degree in '" + item + "'");
    }
  }
  if (gens.empty()) throw UsageError("no generators given");
  return make_alphabet(std::move(gens));
}

struct Options {
  int n = 1;
  int trunc = 4;
  std::string flavor = "seed";
  std::string output;
  std::string model;
  std::string complex;
  int basepoint = 0;
  bool minimal = false;
  int min_degree = 0;
  int max_degree = 0;
  std::string twist;
  bool representatives = false;
  bool cross_check = false;
  bool table = false;
  std::string generators;
  std::string op = "bch";
  std::string x;
  std::string y;
  bool check = false;
  bool verbose = false;
};

int build_model_cmd(const Options& o, std::ostream& out) {
  write_output(emit_model(build_model(o.n, o.trunc, flavor_of(o.flavor))), o.output, out);
  return kOk;
}

int check_cmd(const Options& o, std::ostream& out) {
  if (!o.model.empty()) {
    const auto file = parse_model(read_file(o.model));
    if (file.simplex) {
      const auto report = check_model_axioms(to_simplex_model(file));
      print_report(report, out);
      return report.ok() ? kOk : kCheckFailed;
    }
    CheckReport report;
    auto dd = check_d_squared(file.dgl);
    report.items.push_back({"d-squared", dd.empty(), std::move(dd)});
    print_report(report, out);
    return report.ok() ? kOk : kCheckFailed;
  }
  const Flavor flavor = flavor_of(o.flavor);
  CheckReport report = check_model_axioms(build_model(o.n, o.trunc, flavor));
  if (flavor == Flavor::symmetric) {
    std::vector<SimplexModel> family;
    for (int k = 0; k <= o.n; ++k) family.push_back(build_model(k, o.trunc, flavor));
    for (auto& item : check_cosimplicial_identities(family).items) report.items.push_back(std::move(item));
    auto eq = equivariance_residues(family.back());
    report.items.push_back({"equivariance", eq.empty(), std::move(eq)});
  }
  print_report(report, out);
  return report.ok() ? kOk : kCheckFailed;
}

int model_of_complex_cmd(const Options& o, std::ostream& out) {
  const auto K = parse_complex(read_file(o.complex));
  const auto model = model_of_complex(K, o.trunc, flavor_of(o.flavor));
  if (o.minimal) {
    const auto mm = minimal_model(model, o.basepoint);
    write_output(emit_model(ModelFile{std::nullopt, std::nullopt, mm.dgl}), o.output, out);
    if (o.verbose) {
      for (const auto& [x, g] : mm.eliminated) out << "# eliminated " << x << " with " << g << "\n";
    }
    return kOk;
  }
  write_output(emit_model(ModelFile{std::nullopt, std::nullopt, model.dgl}), o.output, out);
  return kOk;
}

FreeCompleteDGL load_dgl(const Options& o) {
  if (!o.model.empty() && !o.complex.empty()) throw UsageError("give either --model or --complex");
  if (!o.model.empty()) return parse_model(read_file(o.model)).dgl;
  if (!o.complex.empty()) return model_of_complex(parse_complex(read_file(o.complex)), o.trunc, flavor_of(o.flavor)).dgl;
  throw UsageError("--model or --complex is required");
}

int homology_cmd(const Options& o, std::ostream& out) {
  FreeCompleteDGL L = load_dgl(o);
  if (!o.twist.empty()) {
    const auto z = parse_element(L.alphabet(), L.truncation(), o.twist);
    if (!is_mc(L, z)) throw DomainError("twisting element is not Maurer-Cartan");
    L = twist(L, z);
  }
  const auto report = homology(L, o.min_degree, o.max_degree, {o.representatives, o.cross_check});
  out << "homology truncation " << report.truncation << "\n";
  for (const auto& h : report.degrees) {
    out << "degree " << h.degree << " chains " << h.chains << " rank-out " << h.rank_out << " rank-in " << h.rank_in
        << " dim " << h.dim() << "\n";
    for (const auto& z : h.representatives) out << "  representative " << inline_element(z) << "\n";
  }
  return kOk;
}

void print_table(const MalcevQuotient& g, std::ostream& out) {
  for (int i = 0; i < g.dim(); ++i) out << "  basis " << i << " " << inline_element(g.basis()[static_cast<std::size_t>(i)]) << "\n";
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = 0; j < g.dim(); ++j) out << "  product " << i << " " << j << " " << coords_text(g.table(i, j)) << "\n";
  }
}

int malcev_cmd(const Options& o, std::ostream& out) {
  const auto K = parse_complex(read_file(o.complex));
  const auto tower = malcev_tower(K, o.basepoint, o.trunc, flavor_of(o.flavor));
  out << "malcev basepoint " << o.basepoint << " truncation " << o.trunc << "\n";
  bool ok = true;
  std::string dims;
  for (const auto& level : tower) {
    out << "level " << level.quotient.truncation() << " dim " << level.quotient.dim() << " layer " << level.layer_dim
        << " surjective " << (level.surjective ? "yes" : "no") << " kernel-is-layer "
        << (level.kernel_is_layer ? "yes" : "no") << "\n";
    ok = ok && level.surjective && level.kernel_is_layer;
    dims += " " + std::to_string(level.layer_dim);
  }
  out << "dims-per-length" << dims << "\n";
  if (o.table && !tower.empty()) print_table(tower.back().quotient, out);
  return ok ? kOk : kCheckFailed;
}

int pi_cmd(const Options& o, std::ostream& out) {
  const auto L = load_dgl(o);
  if (o.n == 1) {
    const auto g = pi_1(L);
    out << "pi 1 truncation " << L.truncation() << " dim " << g.dim() << "\n";
    print_table(g, out);
    return kOk;
  }
  const auto h = pi_n(L, o.n);
  out << "pi " << o.n << " truncation " << L.truncation() << " dim " << h.dim() << "\n";
  for (const auto& z : h.representatives) out << "  representative " << inline_element(z) << "\n";
  return kOk;
}

int bch_cmd(const Options& o, std::ostream& out) {
  std::optional<FreeCompleteDGL> L;
  AlphabetPtr alphabet;
  int N = o.trunc;
  if (!o.model.empty()) {
    L = parse_model(read_file(o.model)).dgl;
    alphabet = L->alphabet();
    N = L->truncation();
  } else {
    alphabet = parse_generators(o.generators);
  }
  const auto x = parse_element(alphabet, N, o.x);
  const auto y = parse_element(alphabet, N, o.y);
  LieElement r(alphabet, N);
  if (o.op == "bch") {
    r = bch(x, y);
  } else if (o.op == "exp_ad") {
    r = exp_ad(x, y);
  } else if (o.op == "gauge") {
    if (!L) throw UsageError("gauge needs --model for the differential");
    r = gauge(*L, x, y);
  } else {
    throw UsageError("unknown --op '" + o.op + "'");
  }
  out << emit_element(r);
  return kOk;
}

int whitney_cmd(const Options& o, std::ostream& out) {
  if (o.n < 0) throw UsageError("--n must be >= 0");
  if (o.check) {
    bool ok = true;
    for (const auto& r : whitney_identity_suite(o.n)) {
      out << "identity " << r.name << " cases " << r.cases << " failures " << r.failures << " "
          << (r.ok() ? "ok" : "FAIL") << "\n";
      ok = ok && r.ok();
    }
    out << "result " << (ok ? "ok" : "FAIL") << "\n";
    return ok ? kOk : kCheckFailed;
  }
  for (const auto& f : simplex_faces(o.n)) out << "omega" << face_name(f).substr(1) << " = " << to_string(elementary_form(f, o.n)) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact models of simplices and simplicial complexes as complete free DGLs", "cdgl"};
  app.require_subcommand(1);
  Options o;
  auto trunc = [&](CLI::App* sub) {
    sub->add_option("--trunc", o.trunc, "bracket-length truncation N")->check(CLI::Range(1, 16));
  };
  auto flavor = [&](CLI::App* sub) {
    sub->add_option("--flavor", o.flavor, "seed, inductive or symmetric")
        ->check(CLI::IsMember({"seed", "inductive", "symmetric"}));
  };

  auto* build = app.add_subcommand("build-model", "serialize the model of the n-simplex");
  build->add_option("--n", o.n, "simplex dimension")->required()->check(CLI::Range(0, 8));
  trunc(build);
  flavor(build);
  build->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* check = app.add_subcommand("check", "check a serialized model, or a freshly built one");
  check->add_option("--model", o.model, "model file");
  check->add_option("--n", o.n, "simplex dimension when no file is given")->check(CLI::Range(0, 8));
  trunc(check);
  flavor(check);

  auto* moc = app.add_subcommand("model-of-complex", "model of a simplicial complex");
  moc->add_option("--complex", o.complex, "complex file")->required();
  trunc(moc);
  flavor(moc);
  moc->add_option("--basepoint", o.basepoint, "basepoint for the minimal model")->check(CLI::NonNegativeNumber);
  moc->add_flag("--minimal", o.minimal, "reduce to the minimal model");
  moc->add_flag("-v,--verbose", o.verbose, "list eliminated pairs");
  moc->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* hom = app.add_subcommand("homology", "homology of a truncated DGL");
  hom->add_option("--model", o.model, "model file");
  hom->add_option("--complex", o.complex, "complex file");
  trunc(hom);
  flavor(hom);
  hom->add_option("--min", o.min_degree, "lowest degree");
  hom->add_option("--max", o.max_degree, "highest degree");
  hom->add_option("--twist", o.twist, "Maurer-Cartan element to twist by, e.g. a0");
  hom->add_flag("--representatives", o.representatives, "print cycle representatives");
  hom->add_flag("--cross-check", o.cross_check, "recompute ranks by column elimination");

  auto* mal = app.add_subcommand("malcev", "Malcev tower of a connected complex");
  mal->add_option("--complex", o.complex, "complex file")->required();
  trunc(mal);
  flavor(mal);
  mal->add_option("--basepoint", o.basepoint, "basepoint vertex")->check(CLI::NonNegativeNumber);
  mal->add_flag("--table", o.table, "print the BCH table of the last level");

  auto* pi = app.add_subcommand("pi", "homotopy groups of the realization");
  pi->add_option("--n", o.n, "which homotopy group")->required()->check(CLI::PositiveNumber);
  pi->add_option("--model", o.model, "model file");
  pi->add_option("--complex", o.complex, "complex file");
  trunc(pi);
  flavor(pi);

  auto* bchc = app.add_subcommand("bch", "evaluate bch, exp_ad or gauge");
  bchc->add_option("--model", o.model, "model file giving generators, truncation and differential");
  bchc->add_option("--generators", o.generators, "name:degree,... when no model is given");
  trunc(bchc);
  bchc->add_option("--op", o.op, "bch, exp_ad or gauge")->check(CLI::IsMember({"bch", "exp_ad", "gauge"}));
  bchc->add_option("--x", o.x, "first operand")->required();
  bchc->add_option("--y", o.y, "second operand (the MC element for gauge)")->required();

  auto* wh = app.add_subcommand("whitney", "Whitney forms on the n-simplex");
  wh->add_option("--n", o.n, "simplex dimension")->required()->check(CLI::Range(0, 6));
  wh->add_flag("--check", o.check, "run the identity suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*build) return build_model_cmd(o, out);
    if (*check) return check_cmd(o, out);
    if (*moc) return model_of_complex_cmd(o, out);
    if (*hom) return homology_cmd(o, out);
    if (*mal) return malcev_cmd(o, out);
    if (*pi) return pi_cmd(o, out);
    if (*bchc) return bch_cmd(o, out);
    if (*wh) return whitney_cmd(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    err << "structural error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigurationError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cdgl::cli
