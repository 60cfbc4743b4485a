#pragma once

// Test-only reference computations. These work on half-integer rationals
// directly and never call into the library's doubled-coordinate predicates.

#include <tuple>
#include <vector>

#include "whirl/rational.hpp"

#include "whirl/geometry.hpp"

namespace oracle {

using Q = whirl::Rational;

inline Q pivot(int n) { return Q(n - 1, 2); }

/// (i - p)(j' - q) - (i' - p)(j - q) with p = q = (n-1)/2.
inline Q cross(int n, whirl::Cell u, whirl::Cell v) {
  const Q p = pivot(n);
  return (Q(u.i) - p) * (Q(v.j) - p) - (Q(v.i) - p) * (Q(u.j) - p);
}

inline bool ccw(int n, whirl::Cell u, whirl::Cell v) { return cross(n, u, v) > 0; }

/// Parametric segment/ray intersection. A point on the column q counts as
/// east of it, so the crossing is attributed to the arc leaving westward.
inline int north_crossing(int n, whirl::Cell u, whirl::Cell v) {
  const Q q = pivot(n);
  const bool west_u = Q(u.j) < q;
  const bool west_v = Q(v.j) < q;
  if (west_u == west_v) return 0;
  const Q t = (q - Q(u.j)) / Q(v.j - u.j);
  const Q row = Q(u.i) + t * Q(v.i - u.i);
  return row < pivot(n) ? 1 : 0;
}

/// Same for any axis ray, via the four quarter-turn frames.
inline int ray_crossing(int n, whirl::Cell u, whirl::Cell v, whirl::Ray ray) {
  // (i, j) -> (j, n-1-i) is a quarter turn about the pivot taking the west
  // ray onto the north ray; apply it until the requested ray is north.
  // Only meaningful for even n, where no cell lies on an axis.
  auto rot = [n](whirl::Cell c) { return whirl::Cell{c.j, n - 1 - c.i}; };
  int turns = 0;
  switch (ray) {
    case whirl::Ray::north: turns = 0; break;
    case whirl::Ray::west: turns = 1; break;
    case whirl::Ray::south: turns = 2; break;
    case whirl::Ray::east: turns = 3; break;
  }
  for (int k = 0; k < turns; ++k) {
    u = rot(u);
    v = rot(v);
  }
  return north_crossing(n, u, v);
}

struct BruteArc {
  whirl::Cell u, v;
  int w;
};

/// Every ordered knight pair on the board, filtered by the rational CCW test.
inline std::vector<BruteArc> brute_arcs(int n) {
  std::vector<BruteArc> arcs;
  const bool odd = n % 2 == 1;
  auto excluded = [&](whirl::Cell c) { return odd && c.i == n / 2 && c.j == n / 2; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2) {
          const whirl::Cell u{i, j}, v{i2, j2};
          if (excluded(u) || excluded(v)) continue;
          if ((i - i2) * (i - i2) + (j - j2) * (j - j2) != 5) continue;
          if (ccw(n, u, v)) arcs.push_back({u, v, north_crossing(n, u, v)});
        }
  return arcs;
}

/// |T_even|, |T_odd| from the row strips j in [h, n-1-i] of length h - i.
inline std::pair<long long, long long> strip_parity(int n) {
  const int h = n / 2;
  long long even = 0, odd = 0;
  for (int i = 0; i <= h - 1; ++i) {
    const int len = h - i;
    // Strip starts at j = h with parity of i + h.
    const int first_parity = (i + h) % 2;
    const long long starts = (len + 1) / 2;  // cells with the starting parity
    const long long others = len / 2;
    if (first_parity == 0) {
      even += starts;
      odd += others;
    } else {
      odd += starts;
      even += others;
    }
  }
  return {even, odd};
}

}  // namespace oracle
