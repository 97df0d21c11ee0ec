// flatrank: JSON reports on Coxeter diagrams and tree automorphisms.
//
// Exit codes: 0 ok, 1 usage / bad values / I/O, 2 parse, 3 resource cap,
// 4 internal consistency failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flatrank/report.hpp"

namespace {

using namespace flatrank;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CoxeterDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_diagram(buffer.str());
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::optional<Rational> eval_point(const std::string& eval, const std::string& q) {
  if (!eval.empty()) return parse_rational(eval);
  if (!q.empty()) {
    const auto v = detail::parse_integer(q);
    if (!v || *v < 1) throw ParseError("--q must be a positive integer here");
    return Rational(1, *v);
  }
  return std::nullopt;
}

TreeAut automorphism(int length, std::optional<int> reflect) {
  if (reflect) return TreeAut::reflection(*reflect);
  return TreeAut::translation(length);
}

/// "q,translation,l" or "q,reflection,c" or "q,identity".
FlatFactor parse_factor(const std::string& text, int depth) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string p; std::getline(in, p, ',');) parts.push_back(p);
  if (parts.size() < 2) throw ParseError("bad --factor '" + text + "'");
  const auto q = detail::parse_integer(parts[0]);
  if (!q) throw ParseError("bad valence in --factor '" + text + "'");
  FlatFactor f{TreeSpec{static_cast<int>(*q), depth}, TreeAut::identity()};
  f.tree.validate();
  if (parts[1] == "identity" && parts.size() == 2) return f;
  if (parts.size() != 3) throw ParseError("bad --factor '" + text + "'");
  const auto x = detail::parse_integer(parts[2]);
  if (!x) throw ParseError("bad parameter in --factor '" + text + "'");
  if (parts[1] == "translation")
    f.generator = TreeAut::translation(static_cast<int>(*x));
  else if (parts[1] == "reflection")
    f.generator = TreeAut::reflection(static_cast<int>(*x));
  else
    throw ParseError("unknown automorphism kind '" + parts[1] + "'");
  return f;
}

int run(int argc, char** argv) {
  CLI::App app{"Flat-rank bounds for Coxeter diagrams and tidy subgroups of tree automorphism groups"};
  app.require_subcommand(1);

  std::string file, q_text, eval_text, write_path, seed_text;
  int n = 0, length = 1, depth = 4, valence = 2, power = 1, radius = 3;
  std::optional<int> reflect;
  bool with_report = false;
  std::vector<std::string> factors;

  auto* report = app.add_subcommand("report", "full JSON report for a diagram file");
  report->add_option("file", file, "diagram file")->required();
  report->add_option("--q", q_text, "thickness: one integer, or name=value,...");
  report->add_option("--eval", eval_text, "evaluate the growth series at this rational");

  auto* growth = app.add_subcommand("growth", "growth series of a diagram file");
  growth->add_option("file", file, "diagram file")->required();
  growth->add_option("--eval", eval_text, "evaluate at this rational");
  growth->add_option("--q", q_text, "evaluate at 1/q");

  auto* thmc = app.add_subcommand("thmc", "the rank n + 6 diagram of flat rank n");
  thmc->add_option("--n", n, "flat rank")->required();
  thmc->add_flag("--report", with_report, "print the full report instead of the diagram");
  thmc->add_option("--write", write_path, "also write the diagram file here");

  auto* tree_scale = app.add_subcommand("tree-scale", "tidy subgroup, scale and modular function");
  tree_scale->add_option("--q", valence, "tree valence is q + 1")->required();
  auto* len_opt = tree_scale->add_option("--length", length, "translation length");
  tree_scale->add_option("--reflect", reflect, "reflect the axis about this vertex")->excludes(len_opt);
  tree_scale->add_option("--depth", depth, "search ball radius (0..8)");
  tree_scale->add_option("--power", power, "use the automorphism to this power");

  auto* tidy = app.add_subcommand("tidy", "run the tidying procedure from a seed subtree");
  tidy->add_option("--q", valence, "tree valence is q + 1")->required();
  auto* tidy_len = tidy->add_option("--length", length, "translation length");
  tidy->add_option("--reflect", reflect, "reflect the axis about this vertex")->excludes(tidy_len);
  tidy->add_option("--seed", seed_text, "vertices, e.g. \"0 0;0 1;0.1\"")->required();
  tidy->add_option("--depth", depth, "ball radius (0..8)");

  auto* flat = app.add_subcommand("flat", "product of tree automorphisms as a flat subgroup");
  flat->add_option("--factor", factors, "q,translation,l | q,reflection,c | q,identity")->required();
  flat->add_option("--depth", depth, "search ball radius per factor (0..8)");
  flat->add_option("--radius", radius, "exponent lattice radius for the norm table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*report) {
    ReportOptions options;
    if (!q_text.empty()) options.thickness = q_text;
    if (!eval_text.empty()) options.eval = parse_rational(eval_text);
    emit(build_report(load_diagram(file), options));
  } else if (*growth) {
    const CoxeterDiagram d = load_diagram(file);
    const GrowthSeries g = growth_series(d);
    Json out = growth_json(g);
    out["schema"] = kSchemaVersion;
    if (const auto t0 = eval_point(eval_text, q_text)) out["evaluation"] = evaluation_json(g, *t0);
    emit(out);
  } else if (*thmc) {
    const CoxeterDiagram d = thmC_diagram(n);
    if (!write_path.empty()) write_text(write_path, d.to_text());
    if (with_report)
      emit(build_report(d));
    else
      std::cout << d.to_text();
  } else if (*tree_scale) {
    const TreeSpec t{valence, depth};
    t.validate();
    emit(tree_scale_json(t, automorphism(length, reflect).power(power), depth));
  } else if (*tidy) {
    const TreeSpec t{valence, depth};
    t.validate();
    emit(tidying_json(t, automorphism(length, reflect), parse_vertex_list(seed_text)));
  } else if (*flat) {
    FlatSubgroupSpec h;
    for (const auto& f : factors) h.factors.push_back(parse_factor(f, depth));
    emit(flat_json(h, radius));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const flatrank::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const flatrank::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const flatrank::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const flatrank::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
}
