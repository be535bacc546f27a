// sympgrass: Hilbert functions and multiplicities of Schubert varieties in
// the symplectic Grassmannian at T-fixed points.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sympgrass/errors.hpp"
#include "sympgrass/groebner.hpp"
#include "sympgrass/hilbert.hpp"
#include "sympgrass/monw.hpp"
#include "sympgrass/paths.hpp"
#include "sympgrass/poset.hpp"
#include "sympgrass/smt.hpp"
#include "sympgrass/verify.hpp"

using namespace sympgrass;
using nlohmann::json;

namespace {

struct PairArgs {
  int d = 0;
  std::string v;
  std::string w;
};

void add_pair_options(CLI::App* cmd, PairArgs& args) {
  cmd->add_option("--d", args.d, "Rank d; v and w live in I(d)")->required()->check(CLI::Range(1, 64));
  cmd->add_option("--v", args.v, "The point e^v, e.g. 1,2,3,6,7")->required();
  cmd->add_option("--w", args.w, "The Schubert variety X_w, e.g. 3,5,7,9,10")->required();
}

IsotropicSignature parse_signature(const std::string& text, int d, const char* name) {
  IndexSet set;
  try {
    set = IndexSet::parse(text, 2 * d);
  } catch (const InputError& e) {
    throw InputError(std::string("--") + name + ": " + e.what());
  }
  if (set.size() != d) {
    throw InputError(std::string("--") + name + "=" + text + " has " + std::to_string(set.size()) +
                     " entries, expected d=" + std::to_string(d));
  }
  if (!is_isotropic(set)) {
    throw InputError(std::string("--") + name + "=" + text + " is not in I(" + std::to_string(d) +
                     "): need exactly one of j, " + std::to_string(2 * d + 1) + "-j for every j <= d");
  }
  return IsotropicSignature(set);
}

struct Pair {
  IsotropicSignature v;
  IsotropicSignature w;
};

Pair parse_pair(const PairArgs& args) {
  Pair p{parse_signature(args.v, args.d, "v"), parse_signature(args.w, args.d, "w")};
  if (!leq(p.v, p.w)) throw InputError("v=" + p.v.str() + " is not <= w=" + p.w.str() + " componentwise");
  return p;
}

std::string integer_list(const std::vector<BigInt>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + to_decimal(xs[i]);
  return out + "]";
}

json decimal_list(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_decimal(x));
  return out;
}

json point_list(const std::vector<GridPoint>& points) {
  json out = json::array();
  for (GridPoint p : points) out.push_back({p.r, p.c});
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}

  void write(const std::string& text) const {
    if (path_.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw InputError("cannot write " + path_);
    out << text;
  }

 private:
  std::string path_;
};

int run(int argc, char** argv) {
  CLI::App app{"Hilbert functions and multiplicities of symplectic Schubert varieties"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write the result to FILE instead of stdout");

  // poset
  auto* poset = app.add_subcommand("poset", "List I(d) or I(d,n) with degrees");
  int poset_d = 0;
  int poset_n = 0;
  bool poset_json = false;
  poset->add_option("--d", poset_d, "Subset size")->required()->check(CLI::Range(1, 20));
  poset->add_option("--n", poset_n, "Ambient size; lists all of I(d,n) instead of I(d)");
  poset->add_flag("--json", poset_json, "JSON output");
  poset->add_option("--out", out_path, "Write to FILE");

  // monw
  auto* monw = app.add_subcommand("monw", "The monomial mon_w of w relative to v");
  PairArgs monw_args;
  bool monw_json = false;
  add_pair_options(monw, monw_args);
  monw->add_flag("--json", monw_json, "JSON output");
  monw->add_option("--out", out_path, "Write to FILE");

  // hilbert
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the tangent cone, m = 0..max-degree");
  PairArgs hilbert_args;
  int hilbert_degree = 5;
  bool hilbert_json = false;
  bool hilbert_csv = false;
  add_pair_options(hilbert, hilbert_args);
  hilbert->add_option("--max-degree", hilbert_degree, "Largest degree m")->check(CLI::NonNegativeNumber);
  auto* hj = hilbert->add_flag("--json", hilbert_json, "JSON with f-vector, h-vector and dimension");
  hilbert->add_flag("--csv", hilbert_csv, "CSV rows m,value")->excludes(hj);
  hilbert->add_option("--out", out_path, "Write to FILE");

  // mult
  auto* mult = app.add_subcommand("mult", "Multiplicity of X_w at e^v");
  PairArgs mult_args;
  std::string mult_method = "squarefree";
  add_pair_options(mult, mult_args);
  mult->add_option("--method", mult_method, "squarefree | paths | hseries")
      ->check(CLI::IsMember({"squarefree", "paths", "hseries"}));
  mult->add_option("--out", out_path, "Write to FILE");

  // paths
  auto* paths = app.add_subcommand("paths", "Symmetric nonintersecting lattice path systems");
  PairArgs paths_args;
  std::string paths_svg;
  bool paths_ascii = false;
  bool paths_count = false;
  bool paths_all = false;
  add_pair_options(paths, paths_args);
  auto* ps = paths->add_option("--svg", paths_svg, "Write an SVG drawing of every system to FILE");
  paths->add_flag("--ascii", paths_ascii, "Print an ASCII drawing of every system")->excludes(ps);
  paths->add_flag("--count-only", paths_count, "Print only the number of systems");
  paths->add_flag("--no-symmetry", paths_all, "Drop the #-symmetry requirement");
  paths->add_option("--out", out_path, "Write to FILE");

  // smt-count
  auto* smt = app.add_subcommand("smt-count", "Standard tableau counts |SM^v_w(m)|, m = 0..max-degree");
  PairArgs smt_args;
  int smt_degree = 5;
  add_pair_options(smt, smt_args);
  smt->add_option("--max-degree", smt_degree, "Largest degree m")->check(CLI::NonNegativeNumber);
  smt->add_option("--out", out_path, "Write to FILE");

  // grobner
  auto* grob = app.add_subcommand("grobner", "Certify initial terms of the good-pair minors");
  PairArgs grob_args;
  int grob_order = 1;
  std::string grob_scheme = "lex";
  int grob_degree = 4;
  add_pair_options(grob, grob_args);
  grob->add_option("--order", grob_order, "Variable order 1..8")->check(CLI::Range(1, 8));
  grob->add_option("--scheme", grob_scheme, "lex | revlex")->check(CLI::IsMember({"lex", "revlex"}));
  grob->add_option("--max-degree", grob_degree, "Largest degree for the counting check")
      ->check(CLI::NonNegativeNumber);
  grob->add_option("--out", out_path, "Write to FILE");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the verification sweeps and emit a JSON report");
  VerifyConfig cfg;
  std::string suites;
  std::string corpus;
  std::string write_corpus;
  bool no_timings = false;
  ver->add_option("--max-d", cfg.max_d, "Exhaustive range for tmain, grobner, trivial")->check(CLI::Range(1, 6));
  ver->add_option("--max-degree", cfg.max_degree, "Largest degree m")->check(CLI::NonNegativeNumber);
  ver->add_option("--mult-max-d", cfg.mult_max_d, "Exhaustive range for mult and monw")->check(CLI::Range(1, 6));
  ver->add_option("--samples", cfg.samples, "Random tmain pairs at d = max-d + 1")->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", cfg.seed, "Seed for the sampled pairs");
  ver->add_option("--suites", suites, "Comma-separated subset of tmain,mult,grobner,monw,worked-examples,trivial,corpus");
  ver->add_option("--corpus", corpus, "Regression corpus to diff against");
  ver->add_option("--write-corpus", write_corpus, "Write a fresh regression corpus to FILE and exit");
  ver->add_flag("--no-timings", no_timings, "Omit timings so reports are byte-identical across runs");
  ver->add_option("--out", out_path, "Write the report to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const Output out(out_path);

  if (poset->parsed()) {
    json list = json::array();
    std::ostringstream text;
    auto emit = [&](const IndexSet& u) {
      const bool iso = u.n() == 2 * u.size() && is_isotropic(u);
      json item{{"set", u.str()}};
      if (u.n() == 2 * u.size()) item["eps_degree"] = eps_degree(u);
      item["isotropic"] = iso;
      list.push_back(item);
      text << u.str();
      if (u.n() == 2 * u.size()) text << "\teps_degree=" << eps_degree(u);
      text << '\n';
    };
    if (poset_n > 0) {
      for (const auto& u : enumerate_index_sets(poset_d, poset_n)) emit(u);
    } else {
      for (const auto& u : enumerate_isotropic(poset_d)) emit(u);
    }
    out.write(poset_json ? list.dump(2) + "\n" : text.str());
  } else if (monw->parsed()) {
    const Pair p = parse_pair(monw_args);
    const GridMonomial m = mon_w(p.v, p.w);
    if (monw_json) {
      std::vector<GridPoint> diag;
      for (GridPoint q : m.support()) {
        if (on_diagonal(q, p.v.d())) diag.push_back(q);
      }
      json doc{{"d", p.v.d()}, {"v", p.v.str()}, {"w", p.w.str()}, {"mon_w", point_list(m.support())},
               {"diagonal", point_list(diag)}};
      out.write(doc.dump(2) + "\n");
    } else {
      out.write(m.str() + "\n");
    }
  } else if (hilbert->parsed()) {
    const Pair p = parse_pair(hilbert_args);
    const DominatedComplex complex(p.v, p.w);
    const auto hf = complex.hilbert_function(hilbert_degree);
    if (hilbert_json) {
      json doc{{"d", p.v.d()},
               {"v", p.v.str()},
               {"w", p.w.str()},
               {"dimension", complex.dimension()},
               {"multiplicity", to_decimal(complex.multiplicity())},
               {"f_vector", decimal_list(complex.f_vector())},
               {"h_vector", decimal_list(complex.h_vector())},
               {"hilbert", decimal_list(hf)}};
      out.write(doc.dump(2) + "\n");
    } else if (hilbert_csv) {
      std::string text = "m,hilbert\n";
      for (std::size_t m = 0; m < hf.size(); ++m) text += std::to_string(m) + "," + to_decimal(hf[m]) + "\n";
      out.write(text);
    } else {
      out.write(integer_list(hf) + "\n");
    }
  } else if (mult->parsed()) {
    const Pair p = parse_pair(mult_args);
    BigInt value;
    if (mult_method == "paths") {
      value = count_path_systems(p.v, p.w);
    } else {
      const DominatedComplex complex(p.v, p.w);
      value = mult_method == "hseries" ? multiplicity_from_hilbert_polynomial(complex) : complex.multiplicity();
    }
    out.write(to_decimal(value) + "\n");
  } else if (paths->parsed()) {
    const Pair p = parse_pair(paths_args);
    const auto systems = enumerate_path_systems(p.v, p.w, !paths_all);
    if (paths_count) {
      out.write(std::to_string(systems.size()) + "\n");
    } else if (!paths_svg.empty()) {
      Output(paths_svg).write(render(p.v, p.w, systems, RenderFormat::Svg));
    } else {
      out.write(render(p.v, p.w, systems, RenderFormat::Ascii));
    }
  } else if (smt->parsed()) {
    const Pair p = parse_pair(smt_args);
    out.write(integer_list(count_sm(p.v, p.w, smt_degree)) + "\n");
  } else if (grob->parsed()) {
    const Pair p = parse_pair(grob_args);
    const TermOrder order(grob_order, parse_order_scheme(grob_scheme));
    const GrobnerReport rep = certify_grobner(p.v, p.w, order, grob_degree);
    json violations = json::array();
    for (const auto& v : rep.violations) {
      violations.push_back({{"top", v.good.pair.top.str()},
                            {"bottom", v.good.pair.bottom.str()},
                            {"theta", v.good.theta.str()},
                            {"mon_theta", to_string(v.expected)},
                            {"initial_term", to_string(v.found.monomial)},
                            {"initial_coefficient", to_decimal(v.found.coefficient)}});
    }
    json per_degree = json::array();
    for (std::size_t m = 0; m < rep.hilbert_values.size(); ++m) {
      per_degree.push_back({{"m", m},
                            {"avoiding", to_decimal(rep.avoiding_counts[m])},
                            {"hilbert", to_decimal(rep.hilbert_values[m])},
                            {"agree", rep.avoiding_counts[m] == rep.hilbert_values[m]}});
    }
    json doc{{"d", p.v.d()},
             {"v", p.v.str()},
             {"w", p.w.str()},
             {"order", rep.order_index},
             {"scheme", to_string(rep.scheme)},
             {"good_pairs", rep.good_pair_count},
             {"unit_coefficients", rep.unit_coefficients},
             {"violations", violations},
             {"counting_ok", rep.counting_ok},
             {"per_degree", per_degree}};
    out.write(doc.dump(2) + "\n");
  } else if (ver->parsed()) {
    if (!write_corpus.empty()) {
      Output(write_corpus).write(build_corpus(cfg.max_d, cfg.max_degree).dump(1) + "\n");
      return 0;
    }
    if (!suites.empty()) {
      std::stringstream ss(suites);
      for (std::string s; std::getline(ss, s, ',');) cfg.suites.push_back(s);
    }
    if (!corpus.empty()) {
      cfg.corpus = corpus;
    } else if (std::filesystem::exists(SYMPGRASS_DEFAULT_CORPUS)) {
      cfg.corpus = SYMPGRASS_DEFAULT_CORPUS;
    }
    cfg.timings = !no_timings;
    const json report = run_verification(cfg);
    out.write(report.dump(1) + "\n");
    for (const auto& s : report["suites"]) {
      std::cerr << s["name"].get<std::string>() << ": " << (s["ok"].get<bool>() ? "ok" : "FAILED") << " ("
                << s["instances"] << " instances, " << s["failures"] << " failures)\n";
    }
    return report["ok"].get<bool>() ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
