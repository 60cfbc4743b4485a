#include "whirl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "whirl/certificates.hpp"
#include "whirl/digraph.hpp"
#include "whirl/polytope.hpp"
#include "whirl/render.hpp"
#include "whirl/tours.hpp"

namespace whirl::cli {

namespace {

// Input problems that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::string dump(const nlohmann::json& j) { return j.dump() + "\n"; }

int env_threads() {
  if (const char* value = std::getenv("WHIRL_THREADS")) {
    try {
      return std::max(1, std::stoi(value));
    } catch (const std::exception&) {
      throw UsageError(std::string("WHIRL_THREADS must be an integer, got '") + value + "'");
    }
  }
  return 1;
}

FarkasCertificate certificate_for(const std::string& family, int n, const std::string& in) {
  if (family == "t1") return build_t1(n);
  if (family == "t2") return build_t2(n);
  if (family == "n3") return build_n3_certificate();
  if (family == "file") {
    if (in.empty()) throw UsageError("--family file needs --in");
    return certificate_from_json(read_json(in));
  }
  throw UsageError("unknown certificate family '" + family + "' (t1, t2, n3, file)");
}

struct Options {
  int n = 0;
  std::optional<int> c;
  std::optional<int> coil;
  std::string family;
  std::string in;
  std::string out;
  std::string format = "ascii";
  std::string action;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
};

int cmd_digraph(const Options& o, std::ostream& out) {
  const WhirlDigraph g = build_digraph(o.n);
  write_text(o.out, dump(digraph_to_json(g)), out);
  return kPositive;
}

int cmd_cert(const Options& o, std::ostream& out) {
  FarkasCertificate cert = certificate_for(o.family, o.n, o.in);
  if (o.c) cert.set_c(*o.c);
  if (o.action == "build") {
    write_text(o.out, dump(certificate_to_json(cert)), out);
    return kPositive;
  }
  const WhirlDigraph g = build_digraph(cert.n());
  const VerificationReport r = verify_certificate(g, cert);
  std::string text = fmt::format("n={}\nc={}\nsum_alpha={}\nsum_beta={}\ngamma={}\nrhs={}\nmax_lhs={}\n", cert.n(),
                                 cert.c(), cert.alpha_sum(), cert.beta_sum(), cert.gamma(), r.rhs, r.max_lhs);
  text += fmt::format("tight_arcs={}\nviolations={}\n", r.tight_arcs, r.violations.size());
  for (const Violation& v : r.violations) {
    text += fmt::format("violation arc={} u={} v={} w={} lhs={}\n", v.arc.id, to_string(v.arc.tail),
                        to_string(v.arc.head), v.arc.w, v.lhs);
  }
  text += fmt::format("valid={}\n", r.valid ? 1 : 0);
  write_text(o.out, text, out);
  return r.valid ? kPositive : kNegative;
}

int cmd_lp(const Options& o, std::ostream& out) {
  if (!o.c) throw UsageError("lp needs --c");
  const WhirlDigraph g = build_digraph(o.n);
  const LpDecision d = lp_feasible(g, *o.c);
  write_text(o.out, dump(decision_to_json(g, d)), out);
  return d.feasible ? kPositive : kNegative;
}

int cmd_tour(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.action == "verify") {
    if (o.in.empty()) throw UsageError("tour verify needs --in");
    const nlohmann::json j = read_json(o.in);
    int n = 0;
    std::vector<Cell> cells;
    try {
      n = j.at("n").get<int>();
      for (const auto& c : j.at("cells")) cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("malformed tour file: ") + e.what());
    }
    const WhirlDigraph g = build_digraph(n);
    try {
      const Tour tour = tour_from_json(g, j);
      write_text(o.out, fmt::format("valid=1\nn={}\ncoil={}\nreduction={}\n", n, tour.coil,
                                    check_reduction(g, tour) ? 1 : 0),
                 out);
      return kPositive;
    } catch (const std::invalid_argument& e) {
      write_text(o.out, fmt::format("valid=0\nn={}\nreason={}\n", n, e.what()), out);
      return kNegative;
    }
  }

  const WhirlDigraph g = build_digraph(o.n);
  SearchOptions options;
  options.coil_target = o.coil;
  options.budget = o.budget;
  options.seed = o.seed;
  options.threads = env_threads();
  options.progress = [&err](std::uint64_t nodes, int depth) {
    err << fmt::format("progress nodes={} depth={}\n", nodes, depth);
  };
  const SearchResult result = search_tour(g, options);
  err << fmt::format("search nodes={} found={} budget_exhausted={} target_outside_interval={}\n", result.nodes,
                     result.tour ? 1 : 0, result.exhausted_budget ? 1 : 0, result.target_outside_interval ? 1 : 0);
  if (!result.tour) return kNegative;
  const int coil = result.tour->coil;
  if (2 * coil < g.n() || coil > g.n()) {
    err << fmt::format("finding coil_outside_half_n_to_n n={} coil={}\n", g.n(), coil);
  }
  write_text(o.out, dump(tour_to_json(g, *result.tour)), out);
  return kPositive;
}

int cmd_render(const Options& o, std::ostream& out) {
  const render::Format format = render::parse_format(o.format);
  render::RenderSpec spec;
  if (!o.in.empty()) {
    const nlohmann::json j = read_json(o.in);
    if (j.contains("alpha")) {
      spec = render::certificate_spec(certificate_from_json(j));
    } else if (j.contains("arcs")) {
      spec = render::digraph_spec(digraph_from_json(j));
    } else if (j.contains("cells")) {
      const WhirlDigraph g = build_digraph(j.at("n").get<int>());
      spec = render::tour_spec(g, tour_from_json(g, j));
    } else {
      throw UsageError("cannot tell what " + o.in + " contains (expected a digraph, certificate or tour)");
    }
  } else if (!o.family.empty()) {
    spec = render::certificate_spec(certificate_for(o.family, o.n, ""));
  } else {
    spec = render::board_spec(o.n);
  }
  write_text(o.out, render::draw(spec, format), out);
  return kPositive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Whirling knight's tour toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* digraph = app.add_subcommand("digraph", "build the CCW knight digraph and write it as JSON");
  digraph->add_option("--n", o.n, "board side")->required();
  digraph->add_option("--out", o.out, "output path (default stdout)");

  auto* cert = app.add_subcommand("cert", "build or verify a Farkas certificate");
  cert->add_option("action", o.action, "build | verify")->required()->check(CLI::IsMember({"build", "verify"}));
  cert->add_option("--family", o.family, "t1 | t2 | n3 | file")->required();
  cert->add_option("--n", o.n, "board side");
  cert->add_option("--c", o.c, "override the coil count");
  cert->add_option("--in", o.in, "certificate JSON (family file)");
  cert->add_option("--out", o.out, "output path (default stdout)");

  auto* lp = app.add_subcommand("lp", "decide feasibility of the cycle-cover LP at (n, c)");
  lp->add_option("--n", o.n, "board side")->required();
  lp->add_option("--c", o.c, "coil count")->required();
  lp->add_option("--out", o.out, "output path (default stdout)");

  auto* tour = app.add_subcommand("tour", "search for or verify a whirling tour");
  tour->add_option("action", o.action, "search | verify")->required()->check(CLI::IsMember({"search", "verify"}));
  tour->add_option("--n", o.n, "board side");
  tour->add_option("--coil", o.coil, "required coil count");
  tour->add_option("--budget", o.budget, "node expansion budget")->check(CLI::PositiveNumber);
  tour->add_option("--seed", o.seed, "tie-break seed (0 = arc order)");
  tour->add_option("--in", o.in, "tour JSON to verify");
  tour->add_option("--out", o.out, "output path (default stdout)");

  auto* render = app.add_subcommand("render", "draw a board, digraph, certificate or tour");
  render->add_option("--in", o.in, "digraph, certificate or tour JSON");
  render->add_option("--family", o.family, "render a built certificate: t1 | t2 | n3");
  render->add_option("--n", o.n, "board side");
  render->add_option("--format", o.format, "ascii | svg");
  render->add_option("--out", o.out, "output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (*digraph) return cmd_digraph(o, out);
    if (*cert) return cmd_cert(o, out);
    if (*lp) return cmd_lp(o, out);
    if (*tour) return cmd_tour(o, out, err);
    if (*render) return cmd_render(o, out);
  } catch (const NoCycleCover& e) {
    err << "error: no cycle cover exists: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace whirl::cli
