#include "doctest.h"

#include "oracles.hpp"
#include "whirl/certificates.hpp"
#include "whirl/polytope.hpp"

using whirl::Cell;

TEST_CASE("build_t1 supports") {
  const auto s6 = whirl::t1_supports(6);
  CHECK(s6.n_in == std::set<Cell>{{0, 2}, {1, 2}});
  CHECK(s6.n_out == std::set<Cell>{{0, 3}, {1, 3}});

  const auto s14 = whirl::t1_supports(14);
  std::set<int> rows, cols;
  for (const auto& c : s14.n_in) rows.insert(c.i), cols.insert(c.j);
  for (const auto& c : s14.n_out) rows.insert(c.i), cols.insert(c.j);
  CHECK(rows == std::set<int>{0, 1, 4, 5});
  CHECK(cols == std::set<int>{6, 7});

  for (int n : {6, 14, 22, 30}) {
    const auto s = whirl::t1_supports(n);
    CHECK(static_cast<int>(s.n_in.size()) == (n + 2) / 4);
    CHECK(static_cast<int>(s.n_out.size()) == (n + 2) / 4);
    // |N^in| + |N^out| - c = 1
    CHECK(static_cast<int>(s.n_in.size() + s.n_out.size()) - n / 2 == 1);
  }
  CHECK_THROWS_AS(whirl::build_t1(12), std::invalid_argument);
  CHECK_THROWS_AS(whirl::build_t1(-2), std::invalid_argument);
}

TEST_CASE("build_t2 at n=4 reproduces the worked example") {
  const auto cert = whirl::build_t2(4);
  CHECK(cert.alpha({0, 1}) == 1);
  CHECK(cert.alpha({0, 2}) == -1);
  CHECK(cert.beta({0, 2}) == 1);
  CHECK(cert.beta({0, 3}) == 1);
  CHECK(cert.beta({1, 2}) == 1);
  CHECK(cert.alpha_support().size() == 2);
  CHECK(cert.beta_support().size() == 3);
  CHECK(cert.alpha_sum() == 0);
  CHECK(cert.beta_sum() == 3);
  CHECK(cert.gamma() == -1);
  CHECK(cert.c() == 2);
}

TEST_CASE("build_t2 at n=12") {
  const auto s = whirl::t2_supports(12);
  CHECK(s.t_even.size() + s.t_odd.size() == 21);
  CHECK(s.r_rows == std::vector<int>{0, 4});
  for (const auto& c : s.block_out) CHECK(s.t_even.contains(c));
  CHECK_THROWS_AS(whirl::build_t2(14), std::invalid_argument);
}

TEST_CASE("parity_census") {
  auto diff = [](int n) {
    const auto p = whirl::parity_census(n);
    return p.odd_count - p.even_count;
  };
  CHECK(diff(4) == 1);
  CHECK(diff(12) == 3);
  const auto p20 = whirl::parity_census(20);
  const auto [even, odd] = oracle::strip_parity(20);
  CHECK(p20.even_count == even);
  CHECK(p20.odd_count == odd);
  CHECK_THROWS_AS(whirl::parity_census(6), std::invalid_argument);
}

TEST_CASE("verify_certificate on the closed-form families") {
  const auto r6 = whirl::verify_certificate(whirl::build_digraph(6), whirl::build_t1(6));
  CHECK(r6.valid);
  CHECK(r6.rhs == 1);
  CHECK(r6.max_lhs == 0);

  const auto r4 = whirl::verify_certificate(whirl::build_digraph(4), whirl::build_t2(4));
  CHECK(r4.valid);
  CHECK(r4.rhs == 1);

  for (int n = 6; n <= 30; n += 8) {
    const auto r = whirl::verify_certificate(whirl::build_digraph(n), whirl::build_t1(n));
    CHECK(r.valid);
    CHECK(r.rhs == 1);
    CHECK(r.max_lhs == 0);
    CHECK(r.tight_arcs > 0);
  }
  for (int n = 4; n <= 28; n += 8) {
    const auto r = whirl::verify_certificate(whirl::build_digraph(n), whirl::build_t2(n));
    CHECK(r.valid);
    CHECK(r.rhs == 1);
    CHECK(r.max_lhs == 0);
  }
}

TEST_CASE("verify_certificate reports every violation") {
  const auto g = whirl::build_digraph(6);
  whirl::FarkasCertificate zero(6, 3);
  const auto r0 = whirl::verify_certificate(g, zero);
  CHECK_FALSE(r0.valid);
  CHECK(r0.rhs == 0);

  // Flipping gamma makes every crossing arc violate.
  auto cert = whirl::build_t1(6);
  cert.set_gamma(1);
  const auto r = whirl::verify_certificate(g, cert);
  CHECK_FALSE(r.valid);
  int crossing = 0;
  for (int w : g.coil_weight_vector()) crossing += w;
  CHECK(static_cast<int>(r.violations.size()) >= crossing);
  for (std::size_t k = 1; k < r.violations.size(); ++k) {
    CHECK(r.violations[k - 1].arc.id < r.violations[k].arc.id);
  }
  for (const auto& v : r.violations) CHECK(v.lhs > 0);

  CHECK_THROWS_AS(whirl::verify_certificate(whirl::build_digraph(14), cert), std::invalid_argument);
  whirl::FarkasCertificate centre(3, 2, -1);
  centre.set_alpha({1, 1}, 1);
  CHECK_THROWS_AS(whirl::verify_certificate(whirl::build_digraph(3), centre), std::invalid_argument);
}

TEST_CASE("n=3 certificate") {
  const auto g = whirl::build_digraph(3);
  auto cert = whirl::build_n3_certificate();
  CHECK(cert.alpha_support() == std::vector<Cell>{{0, 0}, {1, 0}, {2, 0}});
  const auto r = whirl::verify_certificate(g, cert);
  CHECK(r.valid);
  CHECK(r.rhs == 1);
  cert.set_c(3);
  const auto r3 = whirl::verify_certificate(g, cert);
  CHECK_FALSE(r3.valid);
  CHECK(r3.rhs == 0);
}

TEST_CASE("facts A-C") {
  for (int n : {6, 14, 22}) {
    const auto f = whirl::check_facts_abc(whirl::build_digraph(n));
    CHECK(f.a);
    CHECK(f.b);
    CHECK(f.c);
  }
  CHECK_THROWS_AS(whirl::check_facts_abc(whirl::build_digraph(8)), std::invalid_argument);
}

TEST_CASE("block arcs never join the two block columns") {
  for (int n = 6; n <= 30; n += 8) {
    const auto g = whirl::build_digraph(n);
    const auto s = whirl::t1_supports(n);
    for (const auto& a : g.arcs()) CHECK_FALSE((s.n_out.contains(a.tail) && s.n_in.contains(a.head)));
  }
  for (int n = 4; n <= 28; n += 8) {
    const auto g = whirl::build_digraph(n);
    const auto s = whirl::t2_supports(n);
    for (const auto& a : g.arcs()) CHECK_FALSE((s.block_out.contains(a.tail) && s.block_in.contains(a.head)));
  }
}

TEST_CASE("valid certificates imply LP infeasibility") {
  for (int n : {6, 14, 22}) {
    const auto g = whirl::build_digraph(n);
    const auto cert = whirl::build_t1(n);
    REQUIRE(whirl::verify_certificate(g, cert).valid);
    const auto d = whirl::lp_feasible(g, cert.c());
    CHECK_FALSE(d.feasible);
    CHECK(d.interval.min_coil >= cert.alpha_sum() + cert.beta_sum());
  }
  for (int n : {4, 12, 20}) {
    const auto g = whirl::build_digraph(n);
    const auto cert = whirl::build_t2(n);
    REQUIRE(whirl::verify_certificate(g, cert).valid);
    const auto d = whirl::lp_feasible(g, cert.c());
    CHECK_FALSE(d.feasible);
    CHECK(d.interval.min_coil >= cert.alpha_sum() + cert.beta_sum());
  }
  const auto g3 = whirl::build_digraph(3);
  CHECK_FALSE(whirl::lp_feasible(g3, 2).feasible);
}

TEST_CASE("certificate JSON is row-major and round-trips") {
  const auto cert = whirl::build_t2(12);
  const auto j = whirl::certificate_to_json(cert);
  CHECK(j["n"] == 12);
  CHECK(j["c"] == 6);
  CHECK(j["gamma"] == -1);
  for (std::size_t k = 1; k < j["alpha"].size(); ++k) {
    const auto& a = j["alpha"][k - 1];
    const auto& b = j["alpha"][k];
    CHECK(std::make_pair(a[0].get<int>(), a[1].get<int>()) < std::make_pair(b[0].get<int>(), b[1].get<int>()));
  }
  const auto back = whirl::certificate_from_json(j);
  CHECK(whirl::certificate_to_json(back) == j);
  CHECK_THROWS_AS(whirl::certificate_from_json(nlohmann::json{{"n", 4}}), std::invalid_argument);
  CHECK_THROWS_AS(whirl::certificate_from_json(nlohmann::json::parse(
                      R"({"n":4,"c":2,"gamma":-1,"alpha":[[9,9,1]],"beta":[]})")),
                  std::invalid_argument);
}
