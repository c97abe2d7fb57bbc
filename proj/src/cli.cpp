#include "melonforge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "melonforge/decorated_map.hpp"
#include "melonforge/error.hpp"
#include "melonforge/feynman.hpp"
#include "melonforge/generators.hpp"
#include "melonforge/gluing.hpp"
#include "melonforge/gm.hpp"
#include "melonforge/io.hpp"
#include "melonforge/large_n.hpp"
#include "melonforge/matrix_model.hpp"

namespace melonforge::cli {

using io::json;

int worker_count() {
  if (const char* env = std::getenv("MELONFORGE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

enum class Kind { Bubble, Certificate, Gluing, Tree, Map, Feynman };

Kind detect_kind(const json& j) {
  if (!j.is_object()) throw Error(Errc::Parse, "expected a JSON object");
  if (j.contains("whites")) return Kind::Bubble;
  if (j.contains("sequence")) return Kind::Certificate;
  if (j.contains("quartics")) return Kind::Gluing;
  if (j.contains("bubbles")) return Kind::Feynman;
  if (j.contains("vertices")) {
    const json& v = j.at("vertices");
    return !v.empty() && v.front().is_array() ? Kind::Map : Kind::Tree;
  }
  throw Error(Errc::Parse, "cannot tell which kind of object the file holds");
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Bubble: return "bubble";
    case Kind::Certificate: return "certificate";
    case Kind::Gluing: return "gluing";
    case Kind::Tree: return "tree";
    case Kind::Map: return "map";
    case Kind::Feynman: return "feynman";
  }
  return "unknown";
}

GmCertificate require_gm(const Bubble& b) {
  auto cert = recognize_gm(b);
  if (!cert) throw Error(Errc::NotGm, "bubble is not generalized melonic");
  return *cert;
}

PlaneTree tree_of_file(const std::string& path) {
  const json j = io::read_json_file(path);
  switch (detect_kind(j)) {
    case Kind::Tree: return io::plane_tree_from_json(j);
    case Kind::Gluing: return to_plane_tree(io::gluing_from_json(j));
    case Kind::Bubble: {
      const Bubble b = io::bubble_from_json(j);
      return to_plane_tree(decompose(b, require_gm(b)));
    }
    default: throw Error(Errc::Parse, path + " does not describe a tree, gluing graph or bubble");
  }
}

json rational_json(const Rational& q) { return to_string(q); }

json multiset_json(const GmCertificate& cert) { return io::to_json(cert).at("multiset"); }

struct BubbleArgs {
  std::vector<std::string> files;
  std::vector<int> copies;
  std::vector<std::string> scalings;
  bool all = false;
  int cap = 9;
};

std::vector<std::pair<Bubble, int>> load_bubbles(const BubbleArgs& a) {
  if (a.files.empty()) throw CLI::ValidationError("--bubble", "at least one bubble is required");
  std::vector<std::pair<Bubble, int>> out;
  for (std::size_t k = 0; k < a.files.size(); ++k) {
    const int n = k < a.copies.size() ? a.copies[k] : 1;
    out.emplace_back(io::bubble_from_json(io::read_json_file(a.files[k])), n);
  }
  return out;
}

void add_bubble_options(CLI::App* cmd, BubbleArgs& a) {
  cmd->add_option("--bubble,-b", a.files, "bubble JSON file (repeatable)")->required();
  cmd->add_option("--copies,-k", a.copies, "copies of each bubble, in order");
  cmd->add_option("--cap", a.cap, "largest number of white vertices");
  cmd->add_flag("--all", a.all, "include disconnected graphs");
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized melonic tensor bubbles: recognition, decomposition, enumeration and large-N checks", "melonforge"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv", "dot"}));

  std::string file;
  auto* validate = app.add_subcommand("validate", "check a bubble, certificate, gluing, tree, map or Feynman graph");
  validate->add_option("file", file)->required();

  bool backtracking = false;
  auto* recognize = app.add_subcommand("recognize", "GM recognition with a replay certificate");
  recognize->add_option("file", file)->required();
  recognize->add_flag("--backtracking", backtracking, "use the exhaustive recognizer");

  auto* decompose_cmd = app.add_subcommand("decompose", "tree of quartics whose boundary is the bubble");
  decompose_cmd->add_option("file", file)->required();

  auto* tree_cmd = app.add_subcommand("tree", "plane tree of a bubble or gluing; gluing graph of a plane tree");
  tree_cmd->add_option("file", file)->required();

  auto* scaling = app.add_subcommand("scaling", "scaling coefficient s of a GM bubble");
  scaling->add_option("file", file)->required();

  BubbleArgs bubble_args;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "histogram of bicolored cycle counts over all matchings");
  add_bubble_options(enumerate_cmd, bubble_args);

  int limit = 10;
  auto* gmax_cmd = app.add_subcommand("gmax", "graphs of largest degree");
  add_bubble_options(gmax_cmd, bubble_args);
  gmax_cmd->add_option("--s", bubble_args.scalings, "scaling of each bubble (default: from GM recognition)");
  gmax_cmd->add_option("--limit", limit, "number of graphs to print");

  std::vector<int> sizes;
  std::vector<double> couplings;
  bool series = false;
  int order = 3;
  auto* covariance = app.add_subcommand("covariance", "large-N covariance, numeric or as a series");
  covariance->add_option("--V", sizes, "bubble sizes (repeatable)")->required();
  covariance->add_option("--t", couplings, "couplings, one per size");
  covariance->add_flag("--series", series, "exact series instead of a numeric root");
  covariance->add_option("--order", order, "series truncation order");

  int cap = 10;
  auto* crosscheck = app.add_subcommand("crosscheck", "enumerated dominant 2-point graphs against the covariance series");
  crosscheck->add_option("file", file)->required();
  crosscheck->add_option("--order", order);
  crosscheck->add_option("--cap", cap);

  std::string tree_file;
  int n = 3, trials = 100, edges = 3, d = 4, max_set = 0;
  std::uint64_t seed = 1;
  auto* determinant = app.add_subcommand("verify-determinant", "block determinant against the compact form");
  determinant->add_option("--tree", tree_file, "tree, gluing or bubble JSON (default: random tree)");
  determinant->add_option("--n", n, "matrix size");
  determinant->add_option("--trials", trials);
  determinant->add_option("--seed", seed);
  determinant->add_option("--edges", edges, "edges of the random tree");
  determinant->add_option("--d", d, "colors of the random tree");

  auto* eta = app.add_subcommand("eta", "rescaling exponents of a tree");
  eta->add_option("--tree", tree_file)->required();

  double t = 0.02, tol = 1e-8;
  std::string equation = "consistent";
  auto* saddle = app.add_subcommand("saddle", "saddle point of the tree potential");
  saddle->add_option("--tree", tree_file)->required();
  saddle->add_option("--t", t);
  saddle->add_option("--tol", tol);
  saddle->add_option("--equation", equation, "W equation: consistent (V/2 factor) or stated")
      ->check(CLI::IsMember({"consistent", "stated"}));

  bool check = false;
  auto* expand = app.add_subcommand("expand-log", "word expansion of the logarithmic interaction");
  expand->add_option("--tree", tree_file)->required();
  expand->add_option("--order", order);
  expand->add_flag("--check", check, "compare against -ln det on random 2x2 matrices");
  expand->add_option("--trials", trials);
  expand->add_option("--seed", seed);

  std::string output;
  auto* export_dot = app.add_subcommand("export-dot", "Graphviz rendering of any input object");
  export_dot->add_option("file", file)->required();
  export_dot->add_option("-o,--output", output);

  std::string what;
  int size = 6;
  auto* generate = app.add_subcommand("generate", "random GM bubble or plane tree");
  generate->add_option("what", what)->required()->check(CLI::IsMember({"bubble", "tree"}));
  generate->add_option("--d", d);
  generate->add_option("--size", size, "vertices of the bubble or edges of the tree");
  generate->add_option("--max-set", max_set, "largest color set size (0: d/2)");
  generate->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (validate->parsed()) {
      const json j = io::read_json_file(file);
      const Kind k = detect_kind(j);
      switch (k) {
        case Kind::Bubble: io::bubble_from_json(j); break;
        case Kind::Certificate: replay(io::certificate_from_json(j)); break;
        case Kind::Gluing: io::gluing_from_json(j); break;
        case Kind::Tree: io::plane_tree_from_json(j); break;
        case Kind::Map: io::map_from_json(j); break;
        case Kind::Feynman: io::feynman_from_json(j); break;
      }
      print(out, {{"valid", true}, {"kind", kind_name(k)}});
    } else if (recognize->parsed()) {
      const Bubble b = io::bubble_from_json(io::read_json_file(file));
      const auto cert = backtracking ? recognize_gm_backtracking(b, 64) : recognize_gm(b);
      if (!cert) {
        print(out, {{"gm", false}});
        return kValidation;
      }
      print(out, io::to_json(*cert));
    } else if (decompose_cmd->parsed()) {
      const Bubble b = io::bubble_from_json(io::read_json_file(file));
      print(out, io::to_json(decompose(b, require_gm(b))));
    } else if (tree_cmd->parsed()) {
      const json j = io::read_json_file(file);
      if (detect_kind(j) == Kind::Tree) {
        print(out, io::to_json(from_plane_tree(io::plane_tree_from_json(j))));
      } else {
        print(out, io::to_json(tree_of_file(file)));
      }
    } else if (scaling->parsed()) {
      const Bubble b = io::bubble_from_json(io::read_json_file(file));
      const auto cert = require_gm(b);
      print(out, {{"s", rational_json(scaling_coefficient(cert))},
                  {"num_vertices", b.num_vertices()},
                  {"totally_unbalanced", is_totally_unbalanced(cert)},
                  {"multiset", multiset_json(cert)}});
    } else if (enumerate_cmd->parsed()) {
      const auto bubbles = load_bubbles(bubble_args);
      const auto hist =
          cycle_histogram(make_copies(bubbles), {!bubble_args.all, bubble_args.cap}, worker_count());
      if (format == "tsv") {
        out << "cycles\tcount\n";
        for (const auto& [k, c] : hist) out << k << '\t' << c << '\n';
      } else {
        json rows = json::array();
        std::size_t total = 0;
        for (const auto& [k, c] : hist) {
          rows.push_back({{"cycles", k}, {"count", c}});
          total += c;
        }
        print(out, {{"histogram", rows}, {"total", total}});
      }
    } else if (gmax_cmd->parsed()) {
      const auto bubbles = load_bubbles(bubble_args);
      std::map<int, Rational> s;
      for (std::size_t k = 0; k < bubbles.size(); ++k) {
        s[static_cast<int>(k)] = k < bubble_args.scalings.size() ? parse_rational(bubble_args.scalings[k])
                                                                 : scaling_coefficient(require_gm(bubbles[k].first));
      }
      const auto result = gmax(bubbles, s, {!bubble_args.all, bubble_args.cap});
      json graphs = json::array();
      for (std::size_t k = 0; k < result.graphs.size() && static_cast<int>(k) < limit; ++k)
        graphs.push_back(io::to_json(result.graphs[k]));
      print(out, {{"delta_max", rational_json(result.delta_max)},
                  {"count", result.graphs.size()},
                  {"examined", result.examined},
                  {"graphs", graphs}});
    } else if (covariance->parsed()) {
      if (series) {
        const SeriesPoly c = covariance_series(sizes, order);
        if (format == "tsv") {
          for (const auto& [e, q] : c.terms()) {
            for (int x : e) out << x << '\t';
            out << to_string(q) << '\n';
          }
        } else {
          json terms = json::array();
          for (const auto& [e, q] : c.terms()) terms.push_back({{"exponent", e}, {"coefficient", rational_json(q)}});
          json report = {{"order", order}, {"terms", terms}};
          if (sizes.size() == 1) {
            json coeffs = json::array();
            for (int k = 0; k <= order; ++k) coeffs.push_back(rational_json(c.coefficient(k)));
            report["coefficients"] = coeffs;
          }
          print(out, report);
        }
      } else {
        if (couplings.size() != sizes.size()) throw CLI::ValidationError("--t", "one coupling per --V is required");
        std::vector<Coupling> list;
        for (std::size_t k = 0; k < sizes.size(); ++k) list.push_back({couplings[k], sizes[k]});
        const auto sol = solve_covariance(list);
        print(out, {{"C", sol.value}, {"residual", sol.residual}, {"iterations", sol.iterations}});
      }
    } else if (crosscheck->parsed()) {
      const Bubble b = io::bubble_from_json(io::read_json_file(file));
      const auto report = universality_crosscheck(b, order, cap);
      json enumerated = json::array(), coefficients = json::array();
      for (const auto& q : report.enumerated) enumerated.push_back(rational_json(q));
      for (const auto& q : report.series) coefficients.push_back(rational_json(q));
      json j = {{"order", order}, {"sign", report.sign}, {"enumerated", enumerated}, {"series", coefficients},
                {"agree", report.agree()}};
      if (report.first_mismatch) j["first_mismatch"] = *report.first_mismatch;
      print(out, j);
      if (!report.agree()) return kValidation;
    } else if (determinant->parsed()) {
      PlaneTree tree;
      if (tree_file.empty()) {
        std::mt19937_64 rng(seed);
        tree = random_plane_tree(rng, d, edges);
      } else {
        tree = tree_of_file(tree_file);
      }
      const auto r = determinant_lemma_check(tree, n, trials, seed);
      print(out, {{"trials", r.trials},
                  {"redraws", r.redraws},
                  {"max_relative_error", r.max_relative_error},
                  {"max_relative_error_without_signs", r.max_relative_error_unsigned}});
      if (r.max_relative_error > 1e-9) return kValidation;
    } else if (eta->parsed()) {
      const auto tm = TreeModel::from_tree(tree_of_file(tree_file));
      const auto assignment = eta_exponents(tm);
      const auto ok = check_eta(tm, assignment);
      json values = json::array();
      for (const auto& q : assignment.eta) values.push_back(rational_json(q));
      print(out, {{"s", rational_json(tm.s)},
                  {"eta", values},
                  {"edge_constraints", ok.edge_constraints},
                  {"vertex_constraints", ok.vertex_constraints}});
      if (!ok.edge_constraints || !ok.vertex_constraints) return kValidation;
    } else if (saddle->parsed()) {
      const auto tm = TreeModel::from_tree(tree_of_file(tree_file));
      SaddleOptions opts;
      opts.tol = tol;
      opts.equation = equation == "stated" ? SaddleEquation::AsStated : SaddleEquation::Consistent;
      const auto sol = saddle_point(tm, t, opts);
      print(out, {{"W", sol.w}, {"y", sol.y}, {"gradient_norm", sol.gradient_norm}});
    } else if (expand->parsed()) {
      const auto tm = TreeModel::from_tree(tree_of_file(tree_file));
      const auto terms = expand_log_interaction(tm, order);
      if (check) {
        const auto r = log_expansion_check(tm, order, trials, seed);
        print(out, {{"terms", terms.size()},
                    {"trials", r.trials},
                    {"max_error", r.max_error},
                    {"max_error_over_bound", r.max_ratio},
                    {"largest_norm", r.norm}});
        if (r.max_ratio > 1) return kValidation;
      } else if (format == "tsv") {
        for (const auto& term : terms) out << term.word << '\t' << to_string(term.coefficient) << '\t' << term.multiplicity << '\n';
      } else {
        json rows = json::array();
        for (const auto& term : terms)
          rows.push_back({{"word", term.word}, {"coefficient", rational_json(term.coefficient)}, {"multiplicity", term.multiplicity}});
        print(out, rows);
      }
    } else if (export_dot->parsed()) {
      const json j = io::read_json_file(file);
      std::string dot;
      switch (detect_kind(j)) {
        case Kind::Bubble: dot = io::to_dot(io::bubble_from_json(j)); break;
        case Kind::Certificate: dot = io::to_dot(replay(io::certificate_from_json(j))); break;
        case Kind::Gluing: dot = io::to_dot(io::gluing_from_json(j)); break;
        case Kind::Tree: dot = io::to_dot(io::plane_tree_from_json(j)); break;
        case Kind::Map: dot = io::to_dot(io::map_from_json(j)); break;
        case Kind::Feynman: dot = io::to_dot(io::feynman_from_json(j)); break;
      }
      if (output.empty()) {
        out << dot;
      } else {
        io::write_text_file(output, dot);
      }
    } else if (generate->parsed()) {
      std::mt19937_64 rng(seed);
      if (what == "bubble") {
        print(out, io::to_json(random_gm_bubble(rng, d, size, max_set).bubble));
      } else {
        print(out, io::to_json(random_plane_tree(rng, d, size, max_set)));
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case Errc::Io: return kIo;
      case Errc::NoConvergence:
      case Errc::OutsideBranch:
      case Errc::QuadratureDiverged:
      case Errc::GradientTooLarge: return kNoConvergence;
      default: return kValidation;
    }
  }
  return kOk;
}

}  // namespace melonforge::cli
