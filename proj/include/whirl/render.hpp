#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "whirl/certificates.hpp"
#include "whirl/digraph.hpp"
#include "whirl/tours.hpp"

namespace whirl::render {

enum class Format { ascii, svg };

/// Filled cells. In ASCII each cell prints two glyph slots; `slot` picks
/// which one this layer writes. In SVG a cell with fills in both slots is
/// split into a left and a right half.
struct CellLayer {
  std::vector<Cell> cells;
  std::string fill;  // colour tag, see `fill_colour`
  char glyph = '#';
  int slot = 0;
};

/// Free-form text per cell, e.g. visiting order of a tour. ASCII only.
struct LabelLayer {
  std::map<Cell, std::string> labels;
};

struct ArcLayer {
  std::vector<std::pair<Cell, Cell>> arcs;
  std::string stroke;  // "arc", "crossing" or "tour"
};

struct PlumbLine {};
struct PivotMarker {};

using Layer = std::variant<CellLayer, LabelLayer, ArcLayer, PlumbLine, PivotMarker>;

struct RenderSpec {
  int n = 0;
  std::string title;
  std::vector<Layer> layers;
};

/// Throws std::invalid_argument if a layer references cells off the board.
void validate(const RenderSpec& spec);

RenderSpec board_spec(int n);
RenderSpec digraph_spec(const WhirlDigraph& g);
/// alpha > 0 dark blue 'A', alpha < 0 light blue 'a' in slot 0;
/// beta > 0 dark orange 'B', beta < 0 light orange 'b' in slot 1.
RenderSpec certificate_spec(const FarkasCertificate& cert);
RenderSpec tour_spec(const WhirlDigraph& g, const Tour& tour);

std::string to_ascii(const RenderSpec& spec);
std::string to_svg(const RenderSpec& spec);
std::string draw(const RenderSpec& spec, Format format);

Format parse_format(const std::string& name);

}  // namespace whirl::render
