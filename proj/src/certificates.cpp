#include "whirl/certificates.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace whirl {

namespace {

void require_residue(int n, int residue) {
  if (n < residue || n % 8 != residue) {
    throw std::invalid_argument("n = " + std::to_string(n) + " is not of the form 8m+" +
                                std::to_string(residue));
  }
}

std::vector<Cell> support_of(const std::vector<std::int64_t>& values, int n) {
  std::vector<Cell> cells;
  for (int k = 0; k < static_cast<int>(values.size()); ++k) {
    if (values[k] != 0) cells.push_back({k / n, k % n});
  }
  return cells;
}

}  // namespace

FarkasCertificate::FarkasCertificate(int n, int c, std::int64_t gamma)
    : n_(n),
      c_(c),
      gamma_(gamma),
      alpha_(static_cast<std::size_t>(n) * n, 0),
      beta_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 3) throw std::invalid_argument("board side must be at least 3");
}

std::size_t FarkasCertificate::slot(Cell v) const {
  if (v.i < 0 || v.i >= n_ || v.j < 0 || v.j >= n_) {
    throw std::out_of_range("certificate cell off the board: " + to_string(v));
  }
  return static_cast<std::size_t>(v.i) * n_ + v.j;
}

std::int64_t FarkasCertificate::alpha_sum() const {
  return std::accumulate(alpha_.begin(), alpha_.end(), std::int64_t{0});
}

std::int64_t FarkasCertificate::beta_sum() const {
  return std::accumulate(beta_.begin(), beta_.end(), std::int64_t{0});
}

std::vector<Cell> FarkasCertificate::alpha_support() const { return support_of(alpha_, n_); }
std::vector<Cell> FarkasCertificate::beta_support() const { return support_of(beta_, n_); }

VerificationReport verify_certificate(const WhirlDigraph& g, const FarkasCertificate& cert) {
  if (cert.n() != g.n()) {
    throw std::invalid_argument("certificate is for n = " + std::to_string(cert.n()) +
                                ", digraph has n = " + std::to_string(g.n()));
  }
  for (const Cell& v : cert.alpha_support()) {
    if (!g.has_vertex(v)) throw std::invalid_argument("alpha support off the vertex set: " + to_string(v));
  }
  for (const Cell& v : cert.beta_support()) {
    if (!g.has_vertex(v)) throw std::invalid_argument("beta support off the vertex set: " + to_string(v));
  }

  VerificationReport report;
  report.rhs = cert.alpha_sum() + cert.beta_sum() + cert.c() * cert.gamma();
  bool first = true;
  for (const Arc& e : g.arcs()) {
    const std::int64_t lhs = cert.alpha(e.head) + cert.beta(e.tail) + cert.gamma() * e.w;
    if (first || lhs > report.max_lhs) report.max_lhs = lhs;
    first = false;
    if (lhs > 0) report.violations.push_back({e, lhs});
    if (lhs == 0) ++report.tight_arcs;
  }
  report.valid = report.violations.empty() && report.rhs > 0;
  return report;
}

SupportSets t1_supports(int n) {
  require_residue(n, 6);
  SupportSets s;
  s.n = n;
  s.m = (n - 6) / 8;
  s.h = n / 2;
  for (int k = 0; k <= s.m; ++k) {
    s.r_rows.push_back(4 * k);
    for (int d = 0; d < 2; ++d) {
      s.n_in.insert({4 * k + d, s.h - 1});
      s.n_out.insert({4 * k + d, s.h});
    }
  }
  return s;
}

SupportSets t2_supports(int n) {
  require_residue(n, 4);
  SupportSets s;
  s.n = n;
  s.m = (n - 4) / 8;
  s.h = n / 2;
  for (int i = 0; i <= s.h - 1; ++i) {
    for (int j = s.h; j <= n - 1 - i; ++j) {
      ((i + j) % 2 == 0 ? s.t_even : s.t_odd).insert({i, j});
    }
  }
  for (int k = 0; k <= s.m; ++k) {
    s.r_rows.push_back(4 * k);
    s.block_in.insert({4 * k, s.h - 1});
    s.block_out.insert({4 * k, s.h});
  }
  return s;
}

FarkasCertificate build_t1(int n) {
  const SupportSets s = t1_supports(n);
  FarkasCertificate cert(n, n / 2, -1);
  for (const Cell& v : s.n_in) cert.set_alpha(v, 1);
  for (const Cell& v : s.n_out) cert.set_beta(v, 1);
  return cert;
}

FarkasCertificate build_t2(int n) {
  const SupportSets s = t2_supports(n);
  FarkasCertificate cert(n, n / 2, -1);
  for (const Cell& v : s.t_even) cert.add_alpha(v, -1);
  for (const Cell& v : s.block_in) cert.add_alpha(v, 1);
  for (const Cell& v : s.t_odd) cert.add_beta(v, 1);
  for (const Cell& v : s.block_out) cert.add_beta(v, 1);
  return cert;
}

FarkasCertificate build_n3_certificate() {
  FarkasCertificate cert(3, 2, -1);
  for (int i = 0; i < 3; ++i) cert.set_alpha({i, 0}, 1);
  return cert;
}

ParityCensus parity_census(int n) {
  const SupportSets s = t2_supports(n);
  return {static_cast<std::int64_t>(s.t_even.size()), static_cast<std::int64_t>(s.t_odd.size())};
}

FactsReport check_facts_abc(const WhirlDigraph& g) {
  const SupportSets s = t1_supports(g.n());
  FactsReport r;
  for (const Arc& e : g.arcs()) {
    const bool into_in = s.n_in.contains(e.head);
    const bool out_of_out = s.n_out.contains(e.tail);
    if (into_in && e.w != 1) r.a_counterexamples.push_back(e);
    if (out_of_out && e.w != 1) r.b_counterexamples.push_back(e);
    if (into_in && out_of_out) r.c_counterexamples.push_back(e);
  }
  r.a = r.a_counterexamples.empty();
  r.b = r.b_counterexamples.empty();
  r.c = r.c_counterexamples.empty();
  return r;
}

nlohmann::json certificate_to_json(const FarkasCertificate& cert) {
  nlohmann::json alpha = nlohmann::json::array();
  for (const Cell& v : cert.alpha_support()) alpha.push_back({v.i, v.j, cert.alpha(v)});
  nlohmann::json beta = nlohmann::json::array();
  for (const Cell& v : cert.beta_support()) beta.push_back({v.i, v.j, cert.beta(v)});
  return {{"n", cert.n()}, {"c", cert.c()}, {"gamma", cert.gamma()}, {"alpha", alpha}, {"beta", beta}};
}

FarkasCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    FarkasCertificate cert(j.at("n").get<int>(), j.at("c").get<int>(), j.at("gamma").get<std::int64_t>());
    for (const auto& e : j.at("alpha")) {
      cert.add_alpha({e.at(0).get<int>(), e.at(1).get<int>()}, e.at(2).get<std::int64_t>());
    }
    for (const auto& e : j.at("beta")) {
      cert.add_beta({e.at(0).get<int>(), e.at(1).get<int>()}, e.at(2).get<std::int64_t>());
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace whirl
