#include <sstream>

#include "doctest.h"
#include "hyperham/sweep.hpp"

using namespace hyperham;

namespace {

SweepConfig small(GeneratorKind g) {
    SweepConfig c;
    c.k = 3;
    c.l = 2;
    c.n_list = {9};
    c.generator = g;
    c.p_grid = {1.0};
    c.trials = 1;
    c.seed = 3;
    c.timing = false;
    return c;
}

}  // namespace

TEST_CASE("sweep rows for fixed generators") {
    const auto ext = run_sweep(small(GeneratorKind::Extremal));
    REQUIRE(ext.size() == 1);
    CHECK(ext[0].delta_plus == 4u);
    CHECK(ext[0].hamilton == SearchOutcome::None);
    CHECK(ext[0].pfm == "infeasible");
    CHECK(ext[0].sis == 4u);
    const auto comp = run_sweep(small(GeneratorKind::Complete));
    CHECK(comp[0].hamilton == SearchOutcome::Found);
    const auto rnd = run_sweep(small(GeneratorKind::Random));
    CHECK(rnd[0].delta == comp[0].delta);
    CHECK(rnd[0].delta_plus == comp[0].delta_plus);
    CHECK(rnd[0].hamilton == comp[0].hamilton);
    CHECK(rnd[0].pfm == comp[0].pfm);
    CHECK(rnd[0].sis == comp[0].sis);
    CHECK(rnd[0].ham_nodes == comp[0].ham_nodes);
}

TEST_CASE("sweep csv is deterministic and round trips") {
    auto c = small(GeneratorKind::Random);
    c.n_list = {6, 9};
    c.p_grid = {0.3, 0.7};
    c.trials = 3;
    std::ostringstream a, b;
    const auto rows = run_sweep(c, &a);
    c.workers = 2;
    run_sweep(c, &b);
    CHECK(a.str() == b.str());
    std::istringstream in(a.str());
    const auto back = read_sweep_csv(in);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(csv_line(back[i]) == csv_line(rows[i]));
    CHECK(a.str().find("NA") != std::string::npos);
}

TEST_CASE("sweep config validation") {
    auto c = small(GeneratorKind::Random);
    c.l = 1;
    c.n_list = {9};
    CHECK_THROWS_AS(validate(c), ContractViolation);
    c = small(GeneratorKind::Random);
    c.trials = 0;
    CHECK_THROWS_AS(validate(c), ContractViolation);
}

TEST_CASE("summaries") {
    SweepRow r;
    r.n = 9;
    r.generator = "complete";
    r.hamilton = SearchOutcome::Found;
    r.delta_plus = 7;
    auto s = summarize({r});
    REQUIRE(s.size() == 1);
    CHECK(*s[0].fraction == 1);

    SweepRow b = r;
    b.hamilton = SearchOutcome::BudgetExhausted;
    s = summarize({b, b});
    CHECK_FALSE(s[0].fraction.has_value());
    CHECK(s[0].undecided == 2);

    SweepRow none = r;
    none.hamilton = SearchOutcome::None;
    s = summarize({r, none, none, b});
    CHECK(*s[0].fraction == make_rational(1, 3));
    CHECK(s[0].undecided == 1);
    CHECK_THROWS_AS(summarize({}), ContractViolation);
    CHECK(summary_json(s).find("\"1/3\"") != std::string::npos);
    CHECK(summary_text(s).find("1/3") != std::string::npos);
    CHECK(threshold_svg(s, 2.0 / 3, "t").find("<svg") == 0);
}
