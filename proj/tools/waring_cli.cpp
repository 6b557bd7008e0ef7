// waring: command-line front end.
//
// Exit codes: 0 success (certify: CONSISTENT), 10 certify EXCLUDED,
// 2 input error, 3 computation error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "waring/decompose.hpp"
#include "waring/flattenings.hpp"
#include "waring/forms.hpp"
#include "waring/geom.hpp"
#include "waring/invariants.hpp"
#include "waring/io.hpp"
#include "waring/youngflat.hpp"

using namespace waring;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExcluded = 10;
constexpr int kExitInput = 2;
constexpr int kExitCompute = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string poly;
  std::optional<int> n;
  std::optional<int> d;
  std::optional<int> r;
  std::optional<int> a;
  std::optional<int> p;
  std::optional<int> q;
  std::string kind;
  std::string mode = "auto";
  std::string format = "csv";
  std::string family;
  std::uint64_t seed = 1;
  std::int64_t height = kDefaultHeight;
  std::optional<double> tol;
  std::string out;
  bool verbose = false;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

HomogForm load_form(const Options& o) {
  if (!o.input.empty() && !o.poly.empty()) throw InputError("give either --input or --poly, not both");
  if (!o.poly.empty()) {
    std::optional<int> nvars;
    if (o.n) nvars = *o.n + 1;
    return parse_inline_polynomial(o.poly, nvars, o.d);
  }
  if (o.input.empty()) throw InputError("a polynomial is required (--input FILE or --poly TEXT)");
  std::string text;
  if (o.input == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream f(o.input);
    if (!f) throw InputError("cannot open " + o.input);
    text = read_all(f);
  }
  return parse_polynomial_json(text);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing ") + flag);
  return *v;
}

int cmd_certify(const Options& o) {
  const HomogForm phi = load_form(o);
  const int r = require(o.r, "--r");
  const CertificateReport rep = certify(phi, r);
  json j = report_to_json(rep);
  if (o.verbose) j["polynomial"] = polynomial_to_json(phi);
  emit(o, j.dump(2));
  return rep.verdict == Verdict::Excluded ? kExitExcluded : kExitOk;
}

int cmd_decompose(const Options& o) {
  const HomogForm phi = load_form(o);
  DecomposeOptions opt;
  if (o.tol) {
    if (!(*o.tol > 0)) throw InputError("--tol must be positive");
    opt.minor_tol = *o.tol;
  }
  std::string mode = o.mode;
  if (mode == "auto") {
    if (phi.nvars() == 2) mode = "binary";
    else if (phi.nvars() == 3 && phi.degree() == 5) mode = "quintic";
    else
      throw InputError("no decomposition method for " + std::to_string(phi.nvars()) + " variables and degree " +
                       std::to_string(phi.degree()) + " (binary forms and ternary quintics are supported)");
  }
  WaringDecomposition dec;
  if (mode == "binary") {
    if (phi.nvars() != 2) throw InputError("--mode binary needs a form in 2 variables");
    const int r = o.r ? *o.r : static_cast<int>(cat_border_rank_lb(phi));
    dec = decompose_binary(phi, r, opt);
  } else if (mode == "quintic") {
    if (phi.nvars() != 3 || phi.degree() != 5) throw InputError("--mode quintic needs a ternary quintic");
    dec = decompose_quintic(phi, opt);
  } else {
    throw InputError("--mode must be binary, quintic or auto");
  }
  emit(o, decomposition_to_json(dec, o.verbose).dump(2));
  return kExitOk;
}

std::string koszul_csv(const KoszulPattern& k) {
  std::string out;
  for (std::size_t i = 0; i < k.rows(); ++i) {
    for (std::size_t j = 0; j < k.cols(); ++j) {
      if (j) out += ',';
      const KoszulCell& c = k.cell(i, j);
      if (c.var < 0) out += '0';
      else out += (c.sign < 0 ? "-x" : "x") + std::to_string(c.var);
    }
    out += '\n';
  }
  return out;
}

json subset_labels(const std::vector<std::vector<int>>& labels) {
  json out = json::array();
  for (const auto& s : labels) out.push_back(s);
  return out;
}

int cmd_matrix(const Options& o) {
  if (o.format != "csv" && o.format != "json") throw InputError("--format must be csv or json");
  if (o.kind == "koszul") {
    const int n = require(o.n, "--n"), a = require(o.a, "--a");
    if (n < 0 || a < 0 || a > n) throw InputError("koszul needs 0 <= a <= n");
    const KoszulPattern k = koszul_matrix(n, a);
    if (o.format == "csv") {
      emit(o, koszul_csv(k));
    } else {
      json rows = json::array();
      std::istringstream lines(koszul_csv(k));
      for (std::string line; std::getline(lines, line);) {
        json row = json::array();
        std::istringstream cells(line);
        for (std::string cell; std::getline(cells, cell, ',');) row.push_back(cell);
        rows.push_back(row);
      }
      emit(o, json{{"kind", "koszul"},
                   {"n", n},
                   {"a", a},
                   {"volume_identified", k.volume_identified()},
                   {"rows", k.rows()},
                   {"cols", k.cols()},
                   {"row_labels", subset_labels(k.row_labels())},
                   {"col_labels", subset_labels(k.col_labels())},
                   {"entries", rows}}
                  .dump(2));
    }
    return kExitOk;
  }

  const HomogForm phi = load_form(o);
  ExactMatrix m;
  json meta = {{"kind", o.kind}};
  if (o.kind == "cat") {
    const int a = require(o.a, "--a");
    if (a < 1 || a > phi.degree() - 1)
      throw InputError("cat needs 1 <= a <= d-1 (got a = " + std::to_string(a) + ", d = " +
                       std::to_string(phi.degree()) + ")");
    m = cat_matrix(phi, a);
    meta["a"] = a;
  } else if (o.kind == "yf") {
    const YoungFlattening yf = young_flattening(phi);
    m = yf.matrix;
    meta["structure"] = to_string(yf.structure);
    meta["delta"] = yf.delta;
    meta["a"] = yf.a;
  } else if (o.kind == "twisted") {
    const int p = require(o.p, "--p");
    if (o.q) {
      m = q_twisted_flattening(phi, p, *o.q);
      meta["q"] = *o.q;
    } else {
      m = symmetric_twisted_flattening(phi, p);
    }
    meta["p"] = p;
  } else {
    throw InputError("--kind must be cat, yf, koszul or twisted");
  }
  if (o.format == "csv") {
    emit(o, matrix_csv(m));
  } else {
    json j = matrix_to_json(m);
    for (auto& [k, v] : meta.items()) j[k] = v;
    j["rank"] = rank(m);
    emit(o, j.dump(2));
  }
  return kExitOk;
}

json codim_degree_json(const CodimDegree& cd) {
  return {{"codim", cd.codim.get_str()}, {"degree", cd.degree.get_str()}};
}

int cmd_degree(const Options& o) {
  json j;
  if (!o.family.empty()) {
    if (o.family == "sym") {
      j = codim_degree_json(segre_sym(require(o.n, "--n"), require(o.r, "--r")));
    } else if (o.family == "grass") {
      j = codim_degree_json(segre_grass(require(o.n, "--n"), require(o.r, "--r")));
    } else if (o.family == "sym-series") {
      const int p = require(o.p, "--p");
      if (p < 1) throw InputError("--p must be at least 1");
      const int n = p * (p + 3) / 2, r = static_cast<int>(binomial(p + 1, 2));
      j = codim_degree_json(segre_sym(n, r));
      j["n"] = n;
      j["r"] = r;
    } else if (o.family == "grass-series") {
      const int p = require(o.p, "--p");
      if (p < 1) throw InputError("--p must be at least 1");
      const int n = (p + 1) * (p + 3) - 1, r = static_cast<int>(binomial(p + 2, 2));
      j = codim_degree_json(segre_grass(n, r));
      j["n"] = n;
      j["r"] = r;
    } else {
      throw InputError("--family must be sym, grass, sym-series or grass-series");
    }
    j["family"] = o.family;
    emit(o, j.dump(2));
    return kExitOk;
  }
  const int n = require(o.n, "--n"), d = require(o.d, "--d"), r = require(o.r, "--r");
  const SecantDimReport rep = secant_dim(n, d, r);
  j = {{"n", n},
       {"d", d},
       {"r", r},
       {"codim", BigInt(rep.ambient_dim - rep.actual_dim).get_str()},
       {"expected_dim", rep.expected_dim.get_str()},
       {"dim", rep.actual_dim.get_str()},
       {"defective", rep.defective},
       {"weakly_defective", rep.weakly_defective}};
  std::optional<BigInt> deg = known_secant_degree(n, d, r);
  if (!deg && d == 2 && r <= n + 1) deg = segre_sym(n, r).degree;
  if (!deg && rep.actual_dim == rep.ambient_dim) deg = BigInt(1);
  j["degree"] = deg ? json(deg->get_str()) : json(nullptr);
  emit(o, j.dump(2));
  return kExitOk;
}

int cmd_gen(const Options& o) {
  const int n = require(o.n, "--n"), d = require(o.d, "--d"), r = require(o.r, "--r");
  if (n < 0 || d < 0 || r < 1) throw InputError("gen needs n >= 0, d >= 0, r >= 1");
  if (o.height < 1) throw InputError("--height must be positive");
  const PowerSum ps = random_power_sum(n + 1, d, r, o.seed, o.height);
  json summands = json::array();
  for (const auto& l : ps.summands) {
    json row = json::array();
    for (const auto& c : l.coeffs()) row.push_back(to_string(c));
    summands.push_back(row);
  }
  json j = polynomial_to_json(ps.form);
  j["summands"] = summands;
  j["seed"] = o.seed;
  emit(o, j.dump(2));
  return kExitOk;
}

int cmd_rank_profile(const Options& o) {
  const HomogForm phi = load_form(o);
  if (phi.degree() < 2) throw InputError("rank-profile needs degree >= 2");
  json j = {{"vars", phi.nvars()}, {"degree", phi.degree()}};
  j["profile"] = rank_profile(phi);
  j["cat_lower_bound"] = cat_border_rank_lb(phi);
  if (phi.nvars() >= 2) {
    j["yf_rank"] = rank(young_flattening(phi).matrix);
    j["yf_lower_bound"] = yf_border_rank_lb(phi);
  }
  if (o.r && phi.nvars() == 3) {
    const MembershipReport m = ternary_membership_consistent(phi, *o.r);
    j["membership"] = {{"r", *o.r},
                       {"consistent", m.consistent},
                       {"within_window", m.within_window},
                       {"expected", m.expected},
                       {"warning", m.warning}};
  }
  emit(o, j.dump(2));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Border-rank certificates, Waring decompositions and secant-variety data"};
  app.require_subcommand(1);
  Options o;

  auto add_poly = [&](CLI::App* c) {
    c->add_option("--input", o.input, "polynomial JSON file ('-' for stdin)");
    c->add_option("--poly", o.poly, "inline polynomial, e.g. \"x0^3 + 3/2*x0*x1^2\"");
    c->add_option("--n", o.n, "projective dimension (the form has n+1 variables)");
    c->add_option("--d", o.d, "degree (needed only for the zero polynomial)");
  };
  auto add_common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--out", o.out, "write output to this file");
    c->add_flag("--verbose", o.verbose, "include diagnostic detail");
  };

  auto* certify_cmd = app.add_subcommand("certify", "test membership in the r-th secant variety");
  add_poly(certify_cmd);
  add_common(certify_cmd);
  certify_cmd->add_option("--r", o.r, "secant order")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "write the form as a sum of powers");
  add_poly(decompose_cmd);
  add_common(decompose_cmd);
  decompose_cmd->add_option("--r", o.r, "number of summands (binary forms)");
  decompose_cmd->add_option("--mode", o.mode, "binary | quintic | auto");
  decompose_cmd->add_option("--tol", o.tol, "relative tolerance for the root filter");

  auto* matrix_cmd = app.add_subcommand("matrix", "export a flattening matrix");
  add_poly(matrix_cmd);
  add_common(matrix_cmd);
  matrix_cmd->add_option("--kind", o.kind, "cat | yf | koszul | twisted")->required();
  matrix_cmd->add_option("--a", o.a, "split degree (cat) or wedge step (koszul)");
  matrix_cmd->add_option("--p", o.p, "twisted flattening parameter p");
  matrix_cmd->add_option("--q", o.q, "twisted flattening parameter q (omit for the symmetric one)");
  matrix_cmd->add_option("--format", o.format, "csv | json");

  auto* degree_cmd = app.add_subcommand("degree", "secant variety dimension and degree data");
  add_common(degree_cmd);
  degree_cmd->add_option("--n", o.n, "projective dimension");
  degree_cmd->add_option("--d", o.d, "degree of the Veronese embedding");
  degree_cmd->add_option("--r", o.r, "secant order");
  degree_cmd->add_option("--family", o.family, "sym | grass | sym-series | grass-series");
  degree_cmd->add_option("--p", o.p, "series index");

  auto* gen_cmd = app.add_subcommand("gen", "random sum of powers");
  add_common(gen_cmd);
  gen_cmd->add_option("--n", o.n, "projective dimension")->required();
  gen_cmd->add_option("--d", o.d, "degree")->required();
  gen_cmd->add_option("--r", o.r, "number of powers")->required();
  gen_cmd->add_option("--height", o.height, "coordinate bound");

  auto* profile_cmd = app.add_subcommand("rank-profile", "catalecticant and Young-flattening ranks");
  add_poly(profile_cmd);
  add_common(profile_cmd);
  profile_cmd->add_option("--r", o.r, "check the ternary rank-profile criterion for this r");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*certify_cmd) return cmd_certify(o);
    if (*decompose_cmd) return cmd_decompose(o);
    if (*matrix_cmd) return cmd_matrix(o);
    if (*degree_cmd) return cmd_degree(o);
    if (*gen_cmd) return cmd_gen(o);
    if (*profile_cmd) return cmd_rank_profile(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DecompositionError& e) {
    std::cerr << "decomposition failed: " << e.what() << '\n';
    if (!e.details().is_null()) std::cerr << e.details().dump(2) << '\n';
    return kExitCompute;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  return kExitInput;
}
