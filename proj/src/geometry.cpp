#include "whirl/geometry.hpp"

#include <stdexcept>
#include <string>

namespace whirl {

namespace {

std::string cell_text(Cell c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

void require_knight_pair(const BoardGeometry& geom, Cell u, Cell v) {
  if (!geom.on_board(u) || !geom.on_board(v)) {
    throw std::invalid_argument("cell off the " + std::to_string(geom.n()) + "x" +
                                std::to_string(geom.n()) + " board: " + cell_text(u) + "->" +
                                cell_text(v));
  }
  if (!is_knight_step(v.i - u.i, v.j - u.j)) {
    throw std::invalid_argument("not a knight step: " + cell_text(u) + "->" + cell_text(v));
  }
}

// Side of a doubled coordinate relative to 0 with the half-open rule:
// negative values are side -1, zero and positive values are side +1.
int side(std::int64_t x2) { return x2 < 0 ? -1 : 1; }

}  // namespace

const std::array<KnightStep, 8>& knight_steps() {
  static constexpr std::array<KnightStep, 8> steps{{
      {-2, -1}, {-2, 1}, {-1, -2}, {-1, 2}, {1, -2}, {1, 2}, {2, -1}, {2, 1},
  }};
  return steps;
}

bool is_knight_step(int di, int dj) { return di * di + dj * dj == 5; }

BoardGeometry::BoardGeometry(int n) : n_(n) {
  if (n < 3) throw std::invalid_argument("board side must be at least 3, got " + std::to_string(n));
}

int BoardGeometry::h() const {
  if (!even()) throw std::invalid_argument("h = n/2 is only defined for even n");
  return n_ / 2;
}

std::int64_t ccw_cross2(const BoardGeometry& geom, Cell u, Cell v) {
  return geom.row2(u) * geom.col2(v) - geom.row2(v) * geom.col2(u);
}

bool is_ccw(const BoardGeometry& geom, Cell u, Cell v) {
  require_knight_pair(geom, u, v);
  return ccw_cross2(geom, u, v) > 0;
}

int ray_crossing(const BoardGeometry& geom, Cell u, Cell v, Ray ray) {
  // Work in a frame where the ray is the set {(a, 0) : a < 0} with `a` the
  // coordinate along the ray's axis and `b` the transverse coordinate.
  std::int64_t au, bu, av, bv;
  switch (ray) {
    case Ray::north:
      au = geom.row2(u), bu = geom.col2(u), av = geom.row2(v), bv = geom.col2(v);
      break;
    case Ray::south:
      au = -geom.row2(u), bu = geom.col2(u), av = -geom.row2(v), bv = geom.col2(v);
      break;
    case Ray::west:
      au = geom.col2(u), bu = geom.row2(u), av = geom.col2(v), bv = geom.row2(v);
      break;
    case Ray::east:
    default:
      au = -geom.col2(u), bu = geom.row2(u), av = -geom.col2(v), bv = geom.row2(v);
      break;
  }
  if (side(bu) == side(bv)) return 0;
  // a at b = 0 is au + (av - au) * (-bu) / (bv - bu); test its sign exactly.
  const std::int64_t db = bv - bu;
  const std::int64_t num = au * db - (av - au) * bu;
  return (db > 0 ? num < 0 : num > 0) ? 1 : 0;
}

int crossing_weight(const BoardGeometry& geom, Cell u, Cell v) {
  if (!is_ccw(geom, u, v)) {
    throw std::invalid_argument("not a CCW arc: " + cell_text(u) + "->" + cell_text(v));
  }
  return ray_crossing(geom, u, v, Ray::north);
}

std::optional<Rational> crossing_height(const BoardGeometry& geom, Cell u, Cell v) {
  if (side(geom.col2(u)) == side(geom.col2(v))) return std::nullopt;
  const std::int64_t di = v.i - u.i;
  const std::int64_t dj = v.j - u.j;
  // i_u + di * (q - j_u) / dj with q = (n-1)/2, i.e. (q - j_u) = -col2(u) / 2.
  return Rational(u.i) + Rational(-di * geom.col2(u), 2 * dj);
}

}  // namespace whirl
