#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "whirl/cli.hpp"
#include "whirl/render.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = whirl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "whirl_render_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("ascii board shows the plumb-line and pivot") {
  const std::string text = whirl::render::to_ascii(whirl::render::board_spec(4));
  CHECK(text ==
        "# 4x4 board\n"
        ".. ..|.. ..\n"
        ".. ..|.. ..\n"
        "     +\n"
        ".. .. .. ..\n"
        ".. .. .. ..\n");
}

TEST_CASE("ascii t1 certificate at n=14 has two two-row blocks") {
  const std::string text = whirl::render::to_ascii(whirl::render::certificate_spec(whirl::build_t1(14)));
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);  // title
  std::vector<int> rows;
  for (int i = 0; std::getline(lines, line);) {
    if (line.find("..") == std::string::npos) continue;  // pivot line
    if (line.find('A') != std::string::npos) {
      rows.push_back(i);
      // alpha sits in column 6, beta in column 7
      CHECK(line.substr(6 * 3, 2) == "A.");
      CHECK(line.substr(7 * 3, 2) == ".B");
    }
    ++i;
  }
  CHECK(rows == std::vector<int>{0, 1, 4, 5});
}

TEST_CASE("t2 alpha support at n=12 covers the triangle and the block column") {
  const auto spec = whirl::render::certificate_spec(whirl::build_t2(12));
  std::set<whirl::Cell> alpha_pos, alpha_neg;
  for (const auto& layer : spec.layers) {
    if (const auto* l = std::get_if<whirl::render::CellLayer>(&layer)) {
      if (l->fill == "alpha_pos") alpha_pos.insert(l->cells.begin(), l->cells.end());
      if (l->fill == "alpha_neg") alpha_neg.insert(l->cells.begin(), l->cells.end());
    }
  }
  CHECK(alpha_pos == std::set<whirl::Cell>{{0, 5}, {4, 5}});
  CHECK(alpha_neg == whirl::t2_supports(12).t_even);
}

TEST_CASE("svg output is deterministic and well-formed") {
  const auto g = whirl::build_digraph(4);
  const std::string a = whirl::render::to_svg(whirl::render::digraph_spec(g));
  const std::string b = whirl::render::to_svg(whirl::render::digraph_spec(g));
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("stroke-dasharray") != std::string::npos);
  // pivot circle at the board centre: margin 20 + 4 * 40 / 2
  CHECK(a.find("<circle cx=\"100\" cy=\"100\"") != std::string::npos);
  CHECK_THROWS_AS(whirl::render::parse_format("png"), std::invalid_argument);

  whirl::render::RenderSpec bad = whirl::render::board_spec(4);
  bad.layers.push_back(whirl::render::CellLayer{{{4, 0}}, "alpha_pos", 'A', 0});
  CHECK_THROWS_AS(whirl::render::to_svg(bad), std::invalid_argument);
}

TEST_CASE("cli digraph") {
  const auto path = scratch("g6.json");
  auto r = run({"digraph", "--n", "6", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(slurp(path))["vertices"].size() == 36);
  r = run({"digraph", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["vertices"].size() == 8);
  CHECK(run({"digraph", "--n", "2"}).code == 2);
  CHECK(run({"digraph"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("cli cert") {
  auto r = run({"cert", "verify", "--family", "t1", "--n", "14"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rhs=1\n") != std::string::npos);
  CHECK(r.out.find("valid=1\n") != std::string::npos);
  CHECK(run({"cert", "verify", "--family", "t2", "--n", "12"}).code == 0);
  CHECK(run({"cert", "build", "--family", "t1", "--n", "12"}).code == 2);
  CHECK(run({"cert", "verify", "--family", "n3"}).code == 0);
  r = run({"cert", "verify", "--family", "n3", "--c", "3"});
  CHECK(r.code == 1);
  CHECK(r.out.find("rhs=0\n") != std::string::npos);
  CHECK(run({"cert", "verify", "--family", "bogus", "--n", "6"}).code == 2);

  const auto path = scratch("t2_20.json");
  CHECK(run({"cert", "build", "--family", "t2", "--n", "20", "--out", path.string()}).code == 0);
  CHECK(run({"cert", "verify", "--family", "file", "--in", path.string()}).code == 0);
  // A hand-edited certificate with a violation lists it.
  auto j = nlohmann::json::parse(slurp(path));
  j["gamma"] = 0;
  std::ofstream(path) << j.dump();
  r = run({"cert", "verify", "--family", "file", "--in", path.string()});
  CHECK(r.code == 1);
  CHECK(r.out.find("violation arc=") != std::string::npos);
}

TEST_CASE("cli lp") {
  auto r = run({"lp", "--n", "6", "--c", "3"});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["feasible"] == false);
  r = run({"lp", "--n", "16", "--c", "8"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["min_coil"] == 8);
  CHECK(run({"lp", "--n", "3", "--c", "3"}).code == 0);
  CHECK(run({"lp", "--n", "3"}).code == 2);
}

TEST_CASE("cli tour") {
  const auto path = scratch("t3.json");
  auto r = run({"tour", "search", "--n", "3", "--budget", "1000", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("found=1") != std::string::npos);
  r = run({"tour", "verify", "--in", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("coil=3\n") != std::string::npos);

  r = run({"tour", "search", "--n", "6", "--coil", "3", "--budget", "10000000"});
  CHECK(r.code == 1);
  CHECK(r.err.find("found=0") != std::string::npos);

  // Reversed cycle is structurally fine JSON but not a tour.
  auto j = nlohmann::json::parse(slurp(path));
  std::reverse(j["cells"].begin(), j["cells"].end());
  std::ofstream(path) << j.dump();
  CHECK(run({"tour", "verify", "--in", path.string()}).code == 1);

  std::ofstream(path) << "{not json";
  CHECK(run({"tour", "verify", "--in", path.string()}).code == 2);
  std::ofstream(path) << R"({"n":3})";
  CHECK(run({"tour", "verify", "--in", path.string()}).code == 2);
  CHECK(run({"tour", "search", "--n", "3", "--budget", "0"}).code == 2);
}

TEST_CASE("cli render") {
  auto r = run({"render", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find('+') != std::string::npos);
  CHECK(run({"render", "--n", "4", "--format", "png"}).code == 2);

  r = run({"render", "--family", "t1", "--n", "14", "--format", "svg"});
  CHECK(r.code == 0);
  CHECK(r.out == run({"render", "--family", "t1", "--n", "14", "--format", "svg"}).out);

  const auto tour_path = scratch("render_t3.json");
  run({"tour", "search", "--n", "3", "--out", tour_path.string()});
  r = run({"render", "--in", tour_path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("coil=3") != std::string::npos);

  const auto g_path = scratch("render_g4.json");
  run({"digraph", "--n", "4", "--out", g_path.string()});
  r = run({"render", "--in", g_path.string(), "--format", "svg"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<line") != std::string::npos);
}
