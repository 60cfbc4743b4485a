#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "json.hpp"

#include "whirl/digraph.hpp"

namespace whirl {

/// Integer Farkas multipliers for the cycle-cover LP at (n, c).
///
/// `alpha` multiplies the in-degree row of each vertex, `beta` the out-degree
/// row and `gamma` the coil-count row. Both vectors are dense over the n x n
/// board (row-major) and are kept separate even where they touch the same cell.
class FarkasCertificate {
 public:
  FarkasCertificate(int n, int c, std::int64_t gamma = 0);

  int n() const { return n_; }
  int c() const { return c_; }
  std::int64_t gamma() const { return gamma_; }
  void set_c(int c) { c_ = c; }
  void set_gamma(std::int64_t gamma) { gamma_ = gamma; }

  std::int64_t alpha(Cell v) const { return alpha_.at(slot(v)); }
  std::int64_t beta(Cell v) const { return beta_.at(slot(v)); }
  void set_alpha(Cell v, std::int64_t value) { alpha_.at(slot(v)) = value; }
  void set_beta(Cell v, std::int64_t value) { beta_.at(slot(v)) = value; }
  void add_alpha(Cell v, std::int64_t value) { alpha_.at(slot(v)) += value; }
  void add_beta(Cell v, std::int64_t value) { beta_.at(slot(v)) += value; }

  std::int64_t alpha_sum() const;
  std::int64_t beta_sum() const;

  /// Cells with a nonzero alpha / beta entry, row-major.
  std::vector<Cell> alpha_support() const;
  std::vector<Cell> beta_support() const;

 private:
  std::size_t slot(Cell v) const;

  int n_;
  int c_;
  std::int64_t gamma_;
  std::vector<std::int64_t> alpha_;
  std::vector<std::int64_t> beta_;
};

struct Violation {
  Arc arc;
  std::int64_t lhs = 0;
};

struct VerificationReport {
  std::int64_t rhs = 0;
  std::int64_t max_lhs = 0;
  std::vector<Violation> violations;  // sorted by arc id
  /// Arcs with LHS_e exactly 0.
  int tight_arcs = 0;
  bool valid = false;
};

/// Exact check of LHS_e = alpha_v + beta_u + gamma * w_e <= 0 on every arc
/// e = (u, v) and RHS = sum(alpha) + sum(beta) + c * gamma > 0.
VerificationReport verify_certificate(const WhirlDigraph& g, const FarkasCertificate& cert);

/// Support sets of the two closed-form families.
struct SupportSets {
  int n = 0;
  int m = 0;
  int h = 0;
  std::set<Cell> n_in, n_out;     // n = 8m+6 family
  std::set<Cell> t_even, t_odd;   // n = 8m+4 family, NE-triangle by (i+j) parity
  std::vector<int> r_rows;        // {4k : 0 <= k <= m}
  std::set<Cell> block_in;        // R x {h-1}
  std::set<Cell> block_out;       // R x {h}
};

/// N^in / N^out for n = 8m + 6: rows 4k+d (d in {0,1}) in columns h-1 and h.
SupportSets t1_supports(int n);
/// NE-triangle T split by parity, block rows R and the block cells, n = 8m + 4.
SupportSets t2_supports(int n);

FarkasCertificate build_t1(int n);
FarkasCertificate build_t2(int n);
/// n = 3, c = 2: alpha = 1 on the west column H = {(0,0),(1,0),(2,0)}, gamma = -1.
FarkasCertificate build_n3_certificate();

struct ParityCensus {
  std::int64_t even_count = 0;
  std::int64_t odd_count = 0;
};

/// Counts NE-triangle cells by (i+j) parity, n = 8m + 4.
ParityCensus parity_census(int n);

struct FactsReport {
  bool a = true;  // every arc into N^in crosses the plumb-line
  bool b = true;  // every arc out of N^out crosses the plumb-line
  bool c = true;  // no arc from N^out to N^in
  std::vector<Arc> a_counterexamples, b_counterexamples, c_counterexamples;

  bool all() const { return a && b && c; }
};

FactsReport check_facts_abc(const WhirlDigraph& g);

nlohmann::json certificate_to_json(const FarkasCertificate& cert);
FarkasCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace whirl
