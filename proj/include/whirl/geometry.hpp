#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>

#include "whirl/rational.hpp"

namespace whirl {

/// Board cell. `i` is the row counted from the top, `j` the column from the left.
struct Cell {
  int i = 0;
  int j = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

struct KnightStep {
  int di = 0;
  int dj = 0;

  friend constexpr auto operator<=>(const KnightStep&, const KnightStep&) = default;
};

/// The eight knight displacements in row-major order on (di, dj):
/// (-2,-1) (-2,1) (-1,-2) (-1,2) (1,-2) (1,2) (2,-1) (2,1).
/// Arc enumeration everywhere follows this order.
const std::array<KnightStep, 8>& knight_steps();

bool is_knight_step(int di, int dj);

/// Square n x n board with the pivot at its geometric centre.
///
/// Everything is done in doubled coordinates: a cell (i, j) maps to
/// (2i - (n-1), 2j - (n-1)), which puts the pivot at the origin and keeps
/// half-integer pivots exact.
class BoardGeometry {
 public:
  explicit BoardGeometry(int n);

  int n() const { return n_; }
  /// Doubled pivot coordinate, n - 1 for both axes.
  int pivot2() const { return n_ - 1; }
  bool even() const { return n_ % 2 == 0; }
  /// n / 2; throws for odd n.
  int h() const;

  bool on_board(Cell c) const { return c.i >= 0 && c.i < n_ && c.j >= 0 && c.j < n_; }
  /// Centre cell of an odd board (it sits on the pivot).
  bool is_centre(Cell c) const { return !even() && 2 * c.i == pivot2() && 2 * c.j == pivot2(); }

  std::int64_t row2(Cell c) const { return 2 * c.i - pivot2(); }
  std::int64_t col2(Cell c) const { return 2 * c.j - pivot2(); }

 private:
  int n_;
};

/// Doubled-coordinate cross product (u - p) x (v - p), scaled by 4.
std::int64_t ccw_cross2(const BoardGeometry& geom, Cell u, Cell v);

/// True iff the knight step u -> v turns counter-clockwise about the pivot.
/// A zero cross product is not CCW. Throws std::invalid_argument for
/// off-board cells or a non-knight displacement.
bool is_ccw(const BoardGeometry& geom, Cell u, Cell v);

/// Axis-aligned open rays from the pivot. North is the plumb-line.
enum class Ray { north, east, south, west };

/// Number of times the segment u -> v crosses the chosen open ray (0 or 1).
///
/// Crossing sides are half-open: a point lying exactly on the ray's line
/// belongs to the positive side (east of the plumb-line column for the
/// north/south rays, south of the pivot row for the east/west rays). For
/// even n no cell lies on those lines and this reduces to strict straddling.
int ray_crossing(const BoardGeometry& geom, Cell u, Cell v, Ray ray);

/// Plumb-line weight w_e of arc u -> v. Throws if u -> v is not a CCW arc.
int crossing_weight(const BoardGeometry& geom, Cell u, Cell v);

/// Row at which the segment u -> v meets the pivot column, or nullopt when it
/// does not reach across it.
std::optional<Rational> crossing_height(const BoardGeometry& geom, Cell u, Cell v);

}  // namespace whirl
