#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "logcurves/flc.hpp"

using namespace logcurves;

namespace {

using Pair = std::pair<std::string, std::string>;

} // namespace

TEST_CASE("space dimensions") {
    FLCSpace one = flc_space(1);
    CHECK(one.base_dim() == 0);
    CHECK(one.fiber_dim() == 1);
    CHECK(one.log_dim() == 1);
    for (int n = 2; n <= 5; ++n) {
        FLCSpace sp = flc_space(n);
        CHECK(sp.base_dim() == n - 2);
        CHECK(sp.fiber_dim() == n + 1);
        CHECK(sp.log_dim() == 2 * n - 1);
    }
}

TEST_CASE("coordinate names") {
    FlcFactor a = open_factor(2), b = open_factor(1);
    CHECK(coord_names({a}) == std::vector<std::string>{"L0", "L1", "L2"});
    CHECK(coord_names({a, b}) ==
          std::vector<std::string>{"L0&O", "L1&O", "L2&O", "O&L"});
    FlcFactor deep = factor_at(StableTree::divisor(3, {2, 3}));
    CHECK(coord_names({deep}) == std::vector<std::string>{"L0", "L1", "L2", "L3", "N{2,3}"});
    CHECK(tuple_key({a, deep}) == "(1,2) x (1,(2,3))");
    CHECK(total_coords({a, deep}) == 8);
}

TEST_CASE("composition at open strata") {
    LogStructureMap m = flc_comp(2, 2, 1);
    CHECK(m.source.base == "Mbar(0,3) x Mbar(0,3)");
    CHECK(m.target.base == "Mbar(0,4)|((1,2),3)");
    CHECK(m.source.base_dim == 0);
    CHECK(m.target.base_dim == 0);
    CHECK(m.exponents.rows == 6);
    CHECK(m.exponents.cols == 5);
    REQUIRE(m.stratum_map.size() == 1);
    CHECK(m.stratum_map.front() == Pair{"(1,2) x (1,2)", "((1,2),3)"});
    REQUIRE(m.bundle_matching.size() == 5);
    CHECK(m.bundle_matching[0] == Pair{"L0", "L0&O"});
    CHECK(m.bundle_matching[1] == Pair{"L1", "O&L1"});
    CHECK(m.bundle_matching[2] == Pair{"L2", "O&L2"});
    CHECK(m.bundle_matching[3] == Pair{"L3", "L2&O"});
    CHECK(m.bundle_matching[4] == Pair{"N{1,2}", "L1&O*O&L0"});
}

TEST_CASE("composition at a deep stratum") {
    FlcFactor outer = factor_at(StableTree::divisor(3, {2, 3}));
    FlcFactor inner = open_factor(2);
    FlcMap f = comp_map(3, 2, 2, outer, inner);
    REQUIRE(f.target.size() == 1);
    CHECK(f.target[0].key() == "(1,((2,3),4))");

    LogStructureMap m = materialize(f);
    REQUIRE(m.bundle_matching.size() == 7);
    CHECK(m.bundle_matching[0] == Pair{"L0", "L0&O"});
    CHECK(m.bundle_matching[1] == Pair{"L1", "L1&O"});
    CHECK(m.bundle_matching[2] == Pair{"L2", "O&L1"});
    CHECK(m.bundle_matching[3] == Pair{"L3", "O&L2"});
    CHECK(m.bundle_matching[4] == Pair{"L4", "L3&O"});
    CHECK(m.bundle_matching[5] == Pair{"N{2,3}", "L2&O*O&L0"});
    CHECK(m.bundle_matching[6] == Pair{"N{2,3,4}", "N{2,3}&O"});
}

TEST_CASE("arity-one slots act by multiplication") {
    // right action: generator joins label i
    FlcMap right = comp_map(2, 1, 1, open_factor(2), open_factor(1));
    LogStructureMap mr = materialize(right);
    REQUIRE(mr.bundle_matching.size() == 3);
    CHECK(mr.bundle_matching[0] == Pair{"L0", "L0&O"});
    CHECK(mr.bundle_matching[1] == Pair{"L1", "L1&O*O&L"});
    CHECK(mr.bundle_matching[2] == Pair{"L2", "L2&O"});

    // left action: generator joins the output label
    FlcMap left = comp_map(1, 2, 1, open_factor(1), open_factor(2));
    LogStructureMap ml = materialize(left);
    REQUIRE(ml.bundle_matching.size() == 3);
    CHECK(ml.bundle_matching[0] == Pair{"L0", "L&O*O&L0"});
    CHECK(ml.bundle_matching[1] == Pair{"L1", "O&L1"});
    CHECK(ml.bundle_matching[2] == Pair{"L2", "O&L2"});

    // both slots trivial: the one-dimensional monoid
    FlcMap both = comp_map(1, 1, 1, open_factor(1), open_factor(1));
    LogStructureMap mb = materialize(both);
    REQUIRE(mb.bundle_matching.size() == 1);
    CHECK(mb.bundle_matching[0] == Pair{"L", "L&O*O&L"});
}

TEST_CASE("residue weights") {
    LogStructureMap t1 = theta_log(2, 1);
    CHECK(t1.source.base == "Mbar(0,3)");
    CHECK(t1.target.base == "pt");
    REQUIRE(t1.bundle_matching.size() == 1);
    CHECK(t1.bundle_matching[0] == Pair{"L", "L0*L1"});
    REQUIRE(t1.stratum_map.size() == 1);
    CHECK(t1.stratum_map.front() == Pair{"(1,2)", "pt"});

    // at a deep stratum the separating normal direction enters
    LogStructureMap t2 = theta_log(3, 1, "((1,2),3)");
    REQUIRE(t2.bundle_matching.size() == 1);
    CHECK(t2.bundle_matching[0] == Pair{"L", "L0*L1*N{1,2}"});
    LogStructureMap t3 = theta_log(3, 3, "((1,2),3)");
    CHECK(t3.bundle_matching[0] == Pair{"L", "L0*L3"});

    CHECK_THROWS_AS(theta_log(3, 1, "(bogus)"), std::invalid_argument);
    CHECK_THROWS_AS(theta_log(2, 3), std::invalid_argument);
}

TEST_CASE("residue weights intertwine composition with monoid insertion") {
    FlcFactor outer = open_factor(2), inner = open_factor(2);
    FlcMap comp = comp_map(2, 2, 1, outer, inner);
    FlcMap lhs = compose_maps(comp, theta_all(comp.target[0]));
    FlcMap rhs = compose_maps(product_map(theta_all(outer), theta_all(inner)), comm_insert(2, 2, 1));
    CHECK(lhs.exponents == rhs.exponents);
    CHECK(lhs.target == rhs.target);
}

TEST_CASE("relabeling maps invert") {
    FlcFactor f = factor_at(StableTree::divisor(3, {1, 2}));
    std::vector<int> sigma{2, 3, 1}, inverse{3, 1, 2};
    FlcMap fwd = sigma_map(sigma, f);
    FlcMap bwd = sigma_map(inverse, fwd.target[0]);
    FlcMap round = compose_maps(fwd, bwd);
    CHECK(round == identity_map({f}));
}

TEST_CASE("factor permutations move coordinate blocks") {
    FlcFactor a = open_factor(2), b = open_factor(1);
    FlcMap swap = factor_permute_map({a, b}, {1, 0});
    CHECK(swap.target[0].arity == 1);
    CHECK(swap.target[1].arity == 2);
    // O&L (row 3) pulls back from the first target coordinate
    CHECK(swap.exponents.at(3, 0) == 1);
    CHECK(swap.exponents.at(0, 1) == 1);
    CHECK_THROWS_AS(factor_permute_map({a, b}, {0, 0}), std::invalid_argument);
}

TEST_CASE("monoid composition laws") {
    CHECK(comm_compose_exp({2, 5}, {3}, 1) == std::vector<i64>{5, 5});
    CHECK(comm_compose_exp({2, 5}, {3, 4}, 2) == std::vector<i64>{2, 8, 9});
    std::vector<Word> a{{"x"}, {"y"}}, b{{"u"}, {"v"}};
    auto w = comm_compose(a, b, 2);
    REQUIRE(w.size() == 3);
    CHECK(w[0] == Word{"x"});
    CHECK(w[1] == Word{"y", "u"});
    CHECK(w[2] == Word{"y", "v"});

    CHECK(monoid_name(MonoidTag::circle) == "circle");
    CommGOperad op = comm_g_operad(MonoidTag::log_point, 3);
    REQUIRE(op.descriptor.has_value());
    CHECK(op.descriptor->fiber_dim() == 3);
    CHECK(!comm_g_operad(MonoidTag::trivial, 2).descriptor.has_value());
}

TEST_CASE("axiom sweep is clean") {
    AxiomReport rep = check_flc_axioms(3);
    CHECK(rep.cases > 0);
    CHECK(rep.ok());
    for (const auto& fail : rep.failures) MESSAGE(fail);
}
