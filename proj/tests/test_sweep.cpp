#include <doctest.h>

#include <cmath>

#include "heatconv/io.hpp"
#include "heatconv/sweep.hpp"

using namespace heatconv;

namespace {

SolverSpec secular_spec(int k) {
    SolverSpec s;
    s.method = Method::Secular;
    s.truncation = k;
    return s;
}

}  // namespace

TEST_CASE("method tags and parsing") {
    SolverSpec s;
    CHECK(method_tag(s) == "secular-K8");
    s.method = Method::Oracle;
    CHECK(method_tag(s) == "oracle");
    s.method = Method::Variational;
    CHECK(method_tag(s) == "variational-K2");
    s.method = Method::FirstApprox;
    CHECK(method_tag(s) == "first-approx");

    CHECK(parse_method("secular") == Method::Secular);
    CHECK(parse_method("oracle") == Method::Oracle);
    CHECK(parse_method("variational") == Method::Variational);
    CHECK(parse_method("first-approx") == Method::FirstApprox);
    CHECK_FALSE(parse_method("galerkin").has_value());

    CHECK(method_order(secular_spec(3)) == 3);
    s.method = Method::FirstApprox;
    CHECK(method_order(s) == 0);
}

TEST_CASE("neutral curve at N=1 is unimodal over [2, 5]") {
    const auto pts = neutral_curve(1.0, 2.0, 5.0, 31, secular_spec(2));
    REQUIRE(pts.size() == 31);
    for (size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].a > pts[i - 1].a);
    for (const auto& p : pts) CHECK(p.ok);

    size_t imin = 0;
    for (size_t i = 1; i < pts.size(); ++i)
        if (pts[i].rayleigh < pts[imin].rayleigh) imin = i;
    CHECK(imin > 0);
    CHECK(imin + 1 < pts.size());
    for (size_t i = 1; i <= imin; ++i) CHECK(pts[i].rayleigh < pts[i - 1].rayleigh);
    for (size_t i = imin + 1; i < pts.size(); ++i) CHECK(pts[i].rayleigh > pts[i - 1].rayleigh);
}

TEST_CASE("point evaluations reproduce frozen two-term values") {
    CHECK(evaluate_rayleigh(std::sqrt(9.711), 0.0, secular_spec(2)) ==
          doctest::Approx(1715.079324).epsilon(1e-6));
    CHECK(evaluate_rayleigh(std::sqrt(10.0), 1.0, secular_spec(2)) ==
          doctest::Approx(1712.257687).epsilon(1e-6));
}

TEST_CASE("critical point of the two-term curve at N=0") {
    const auto cp = critical_point(0.0, secular_spec(2), 2.0, 5.0);
    CHECK(cp.a_crit == doctest::Approx(3.1163).epsilon(0.01));
    CHECK(cp.ra_crit == doctest::Approx(1715.08).epsilon(1e-3));
    CHECK(cp.bracket <= 1e-4);
    CHECK(cp.ra_crit <= evaluate_rayleigh(cp.a_crit + 0.05, 0.0, secular_spec(2)));
    CHECK(cp.ra_crit <= evaluate_rayleigh(cp.a_crit - 0.05, 0.0, secular_spec(2)));
}

TEST_CASE("critical point from the collocation solver matches the benchmark") {
    SolverSpec s;
    s.method = Method::Oracle;
    s.resolution = 48;
    const auto cp = critical_point(0.0, s, 2.5, 4.0);
    CHECK(cp.ra_crit == doctest::Approx(1707.762).epsilon(5e-4));
    CHECK(cp.a_crit == doctest::Approx(3.117).epsilon(5e-3));
}

TEST_CASE("critical point search rejects a bracket without an interior minimum") {
    CHECK_THROWS_AS(critical_point(0.0, secular_spec(2), 5.0, 8.0), std::runtime_error);
}

TEST_CASE("degenerate 1x1 surface equals a single solve") {
    const auto grid = neutral_surface(2.0, 2.0, 1, 3.0, 3.0, 1, secular_spec(2));
    REQUIRE(grid.size() == 1);
    CHECK(grid[0].rayleigh ==
          doctest::Approx(evaluate_rayleigh(3.0, 2.0, secular_spec(2))).epsilon(1e-14));
    CHECK(grid[0].n_rate == 2.0);
    CHECK(grid[0].a == 3.0);
}

TEST_CASE("surface slices show destabilization with stronger heating") {
    const auto grid = neutral_surface(0.0, 16.0, 5, 3.0, 3.5, 3, secular_spec(4));
    REQUIRE(grid.size() == 15);
    // row-major, N outer: fix each a column and walk N upward
    for (int j = 0; j < 3; ++j) {
        for (int i = 1; i < 5; ++i) {
            const auto& lo = grid[(i - 1) * 3 + j];
            const auto& hi = grid[i * 3 + j];
            REQUIRE(lo.ok);
            REQUIRE(hi.ok);
            CHECK(hi.n_rate > lo.n_rate);
            CHECK(hi.a == lo.a);
            CHECK(hi.rayleigh < lo.rayleigh);
        }
    }
}

TEST_CASE("sweeps record per-point failures and keep going") {
    SolverSpec s;
    s.method = Method::Variational;
    s.basis_size = 1;  // rejected by the solver
    const auto pts = neutral_curve(0.0, 3.0, 3.2, 3, s);
    REQUIRE(pts.size() == 3);
    for (const auto& p : pts) {
        CHECK_FALSE(p.ok);
        CHECK_FALSE(p.error.empty());
    }
}

TEST_CASE("reference table lookup") {
    REQUIRE(table1_rows().size() == 16);
    CHECK(table1_paper_value(0.0, 9.711, secular_spec(2)) == 1715.079324);
    CHECK(table1_paper_value(0.0, 9.711, secular_spec(3)) == 1715.079324);
    SolverSpec v;
    v.method = Method::Variational;
    CHECK(table1_paper_value(0.0, 9.711, v) == 1749.97575);
    CHECK_FALSE(table1_paper_value(0.5, 9.711, secular_spec(2)).has_value());
    SolverSpec o;
    o.method = Method::Oracle;
    CHECK_FALSE(table1_paper_value(0.0, 9.711, o).has_value());
}

TEST_CASE("table report is deterministic across runs") {
    const std::vector<SolverSpec> methods{secular_spec(2), secular_spec(3)};
    const auto r1 = table1_report(methods);
    const auto r2 = table1_report(methods);
    CHECK(to_csv(records_from_table1(r1)) == to_csv(records_from_table1(r2)));
    REQUIRE(r1.cells.size() == 16);
    for (const auto& row : r1.cells) {
        REQUIRE(row.size() == 2);
        for (const auto& cell : row) {
            CHECK(cell.ok);
            REQUIRE(cell.paper.has_value());
            CHECK(std::abs(cell.computed - *cell.paper) <= 0.01 * *cell.paper);
        }
    }
}

TEST_CASE("thread cap honours the environment override") {
    CHECK(max_threads() >= 1);
}
