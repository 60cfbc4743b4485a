#include "whirl/render.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <fmt/core.h>

namespace whirl::render {

namespace {

constexpr int kScale = 40;   // user units per cell
constexpr int kMargin = 20;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string fill_colour(const std::string& tag) {
  if (tag == "alpha_pos") return "#1f4e9c";
  if (tag == "alpha_neg") return "#a9c8f0";
  if (tag == "beta_pos") return "#d8700a";
  if (tag == "beta_neg") return "#f6c68f";
  if (tag == "excluded") return "#9a9a9a";
  return "#777777";
}

std::string stroke_colour(const std::string& tag) {
  if (tag == "crossing") return "#c0392b";
  if (tag == "tour") return "#222222";
  return "#8a8a8a";
}

// Cell centres sit at (j + 0.5, i + 0.5) cells, i.e. integer user units.
int cx(int j) { return kMargin + j * kScale + kScale / 2; }
int cy(int i) { return kMargin + i * kScale + kScale / 2; }

void check_cell(const RenderSpec& spec, Cell c) {
  if (c.i < 0 || c.i >= spec.n || c.j < 0 || c.j >= spec.n) {
    throw std::invalid_argument("render layer references off-board cell " + to_string(c));
  }
}

}  // namespace

void validate(const RenderSpec& spec) {
  if (spec.n < 3) throw std::invalid_argument("render board side must be at least 3");
  for (const Layer& layer : spec.layers) {
    std::visit(Overloaded{
                   [&](const CellLayer& l) {
                     for (const Cell& c : l.cells) check_cell(spec, c);
                   },
                   [&](const LabelLayer& l) {
                     for (const auto& [c, text] : l.labels) check_cell(spec, c);
                   },
                   [&](const ArcLayer& l) {
                     for (const auto& [u, v] : l.arcs) {
                       check_cell(spec, u);
                       check_cell(spec, v);
                     }
                   },
                   [](const PlumbLine&) {},
                   [](const PivotMarker&) {},
               },
               layer);
  }
}

RenderSpec board_spec(int n) {
  RenderSpec spec;
  spec.n = n;
  spec.title = fmt::format("{}x{} board", n, n);
  if (n % 2 == 1) {
    spec.layers.push_back(CellLayer{{{n / 2, n / 2}}, "excluded", 'X', 0});
    spec.layers.push_back(CellLayer{{{n / 2, n / 2}}, "excluded", 'X', 1});
  }
  spec.layers.push_back(PlumbLine{});
  spec.layers.push_back(PivotMarker{});
  return spec;
}

RenderSpec digraph_spec(const WhirlDigraph& g) {
  RenderSpec spec = board_spec(g.n());
  spec.title = fmt::format("whirling knight digraph, n={}, {} arcs", g.n(), g.arc_count());
  ArcLayer plain{{}, "arc"};
  ArcLayer crossing{{}, "crossing"};
  for (const Arc& a : g.arcs()) (a.w ? crossing : plain).arcs.emplace_back(a.tail, a.head);
  spec.layers.insert(spec.layers.begin(), std::move(crossing));
  spec.layers.insert(spec.layers.begin(), std::move(plain));
  return spec;
}

RenderSpec certificate_spec(const FarkasCertificate& cert) {
  RenderSpec spec = board_spec(cert.n());
  spec.title = fmt::format("Farkas certificate, n={}, c={}, gamma={}", cert.n(), cert.c(), cert.gamma());
  CellLayer alpha_pos{{}, "alpha_pos", 'A', 0};
  CellLayer alpha_neg{{}, "alpha_neg", 'a', 0};
  CellLayer beta_pos{{}, "beta_pos", 'B', 1};
  CellLayer beta_neg{{}, "beta_neg", 'b', 1};
  for (const Cell& v : cert.alpha_support()) (cert.alpha(v) > 0 ? alpha_pos : alpha_neg).cells.push_back(v);
  for (const Cell& v : cert.beta_support()) (cert.beta(v) > 0 ? beta_pos : beta_neg).cells.push_back(v);
  std::vector<Layer> layers{alpha_pos, alpha_neg, beta_pos, beta_neg};
  spec.layers.insert(spec.layers.begin(), layers.begin(), layers.end());
  return spec;
}

RenderSpec tour_spec(const WhirlDigraph& g, const Tour& tour) {
  RenderSpec spec = board_spec(g.n());
  spec.title = fmt::format("whirling tour, n={}, coil={}", g.n(), tour.coil);
  ArcLayer plain{{}, "tour"};
  ArcLayer crossing{{}, "crossing"};
  LabelLayer order;
  for (std::size_t k = 0; k < tour.cells.size(); ++k) {
    const Cell& u = tour.cells[k];
    const Cell& v = tour.cells[(k + 1) % tour.cells.size()];
    const int id = g.find_arc(u, v);
    if (id < 0) throw std::invalid_argument("tour step is not an arc: " + to_string(u) + "->" + to_string(v));
    (g.arcs()[id].w ? crossing : plain).arcs.emplace_back(u, v);
    order.labels[u] = std::to_string(k);
  }
  spec.layers.insert(spec.layers.begin(), {Layer{plain}, Layer{crossing}, Layer{order}});
  return spec;
}

std::string to_ascii(const RenderSpec& spec) {
  validate(spec);
  const int n = spec.n;
  std::vector<std::string> text(static_cast<std::size_t>(n) * n, "..");
  bool plumb = false;
  bool pivot = false;
  std::vector<std::string> arc_lines;
  for (const Layer& layer : spec.layers) {
    std::visit(Overloaded{
                   [&](const CellLayer& l) {
                     for (const Cell& c : l.cells) {
                       std::string& t = text[c.i * n + c.j];
                       if (t.size() != 2) t = "..";
                       t[l.slot == 0 ? 0 : 1] = l.glyph;
                     }
                   },
                   [&](const LabelLayer& l) {
                     for (const auto& [c, label] : l.labels) text[c.i * n + c.j] = label;
                   },
                   [&](const ArcLayer& l) {
                     for (const auto& [u, v] : l.arcs) {
                       arc_lines.push_back(fmt::format("{} {}->{}", l.stroke, to_string(u), to_string(v)));
                     }
                   },
                   [&](const PlumbLine&) { plumb = true; },
                   [&](const PivotMarker&) { pivot = true; },
               },
               layer);
  }
  std::size_t width = 2;
  for (const auto& t : text) width = std::max(width, t.size());

  // Columns are separated by one character. For even n the separator between
  // columns n/2-1 and n/2 is the pivot column: '|' above the pivot row when
  // the plumb-line is drawn, and '+' on the extra line marking the pivot.
  const bool even = n % 2 == 0;
  const int h = n / 2;
  std::string out = "# " + spec.title + "\n";
  for (int i = 0; i < n; ++i) {
    if (even && pivot && i == h) {
      std::string line;
      for (int j = 0; j < n; ++j) {
        line += std::string(width, ' ');
        if (j + 1 < n) line += (j + 1 == h) ? '+' : ' ';
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out += line + "\n";
    }
    std::string line;
    for (int j = 0; j < n; ++j) {
      const std::string& t = text[i * n + j];
      line += std::string(width - t.size(), ' ') + t;
      if (j + 1 < n) line += (even && plumb && j + 1 == h && i < h) ? '|' : ' ';
    }
    out += line + "\n";
  }
  if (!even && plumb) out += fmt::format("# plumb-line: column {} above row {}\n", h, h);
  if (!even && pivot) out += fmt::format("# pivot: cell ({},{})\n", h, h);
  for (const auto& l : arc_lines) out += l + "\n";
  return out;
}

std::string to_svg(const RenderSpec& spec) {
  validate(spec);
  const int n = spec.n;
  const int size = 2 * kMargin + n * kScale;
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n", size);
  out += fmt::format("<title>{}</title>\n", spec.title);
  out +=
      "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
      "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" "
      "fill=\"context-stroke\"/></marker></defs>\n";
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{0}\" fill=\"#ffffff\"/>\n", size);

  // Fills per cell per slot, later layers win.
  std::map<Cell, std::array<std::string, 2>> fills;
  for (const Layer& layer : spec.layers) {
    if (const auto* l = std::get_if<CellLayer>(&layer)) {
      for (const Cell& c : l->cells) fills[c][l->slot == 0 ? 0 : 1] = fill_colour(l->fill);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int x = kMargin + j * kScale;
      const int y = kMargin + i * kScale;
      out += fmt::format(
          "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#444444\" "
          "stroke-width=\"1\"/>\n",
          x, y, kScale, kScale);
      const auto it = fills.find({i, j});
      if (it == fills.end()) continue;
      const auto& [left, right] = it->second;
      if (!left.empty() && !right.empty() && left != right) {
        out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n", x, y,
                           kScale / 2, kScale, left);
        out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n", x + kScale / 2,
                           y, kScale / 2, kScale, right);
      } else {
        out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n", x, y, kScale,
                           kScale, left.empty() ? right : left);
      }
    }
  }

  // Pivot at ((n-1)/2, (n-1)/2) cells; both coordinates are integral in user units.
  const int pivot = kMargin + n * kScale / 2;
  for (const Layer& layer : spec.layers) {
    std::visit(Overloaded{
                   [](const CellLayer&) {},
                   [&](const LabelLayer& l) {
                     for (const auto& [c, label] : l.labels) {
                       out += fmt::format(
                           "<text x=\"{}\" y=\"{}\" font-size=\"10\" fill=\"#555555\">{}</text>\n",
                           cx(c.j) - kScale / 2 + 3, cy(c.i) - kScale / 2 + 11, label);
                     }
                   },
                   [&](const ArcLayer& l) {
                     for (const auto& [u, v] : l.arcs) {
                       out += fmt::format(
                           "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\" "
                           "marker-end=\"url(#arrow)\"/>\n",
                           cx(u.j), cy(u.i), cx(v.j), cy(v.i), stroke_colour(l.stroke));
                     }
                   },
                   [&](const PlumbLine&) {
                     out += fmt::format(
                         "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#000000\" stroke-width=\"2\" "
                         "stroke-dasharray=\"6 4\"/>\n",
                         pivot, kMargin, pivot);
                   },
                   [&](const PivotMarker&) {
                     out += fmt::format("<circle cx=\"{0}\" cy=\"{0}\" r=\"4\" fill=\"#000000\"/>\n", pivot);
                   },
               },
               layer);
  }
  out += "</svg>\n";
  return out;
}

std::string draw(const RenderSpec& spec, Format format) {
  return format == Format::svg ? to_svg(spec) : to_ascii(spec);
}

Format parse_format(const std::string& name) {
  if (name == "ascii") return Format::ascii;
  if (name == "svg") return Format::svg;
  throw std::invalid_argument("unknown render format '" + name + "' (expected ascii or svg)");
}

}  // namespace whirl::render
