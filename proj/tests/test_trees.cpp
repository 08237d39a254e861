#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "logcurves/json_out.hpp"
#include "logcurves/trees.hpp"
#include "logcurves/verify.hpp"

using namespace logcurves;

namespace {

// Independent enumeration through the nested-family characterization: a tree
// with c internal edges is exactly a family of c distinct mark subsets
// (2 <= |B| <= n-1), pairwise nested or disjoint, such that every member of
// the family together with the full mark set heads at least two children
// (maximal proper sub-blocks plus loose marks).
using Family = std::set<std::vector<int>>;

bool nested_or_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    if (inter.empty()) return true;
    return inter.size() == a.size() || inter.size() == b.size();
}

int child_count(const std::vector<int>& block, const Family& family) {
    // maximal proper sub-blocks
    std::vector<std::vector<int>> subs;
    for (const auto& b : family) {
        if (b == block || b.size() >= block.size()) continue;
        if (!std::includes(block.begin(), block.end(), b.begin(), b.end())) continue;
        bool maximal = true;
        for (const auto& other : family) {
            if (other == b || other == block) continue;
            if (other.size() <= b.size() || other.size() >= block.size()) continue;
            if (std::includes(other.begin(), other.end(), b.begin(), b.end()) &&
                std::includes(block.begin(), block.end(), other.begin(), other.end()))
                maximal = false;
        }
        if (maximal) subs.push_back(b);
    }
    int covered = 0;
    for (const auto& s : subs) covered += static_cast<int>(s.size());
    return static_cast<int>(subs.size()) + static_cast<int>(block.size()) - covered;
}

std::set<Family> nested_families(int n, int c) {
    std::vector<std::vector<int>> blocks;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> b;
        for (int k = 1; k <= n; ++k)
            if (mask & (1u << (k - 1))) b.push_back(k);
        if (b.size() >= 2 && static_cast<int>(b.size()) <= n - 1) blocks.push_back(b);
    }
    std::vector<int> full;
    for (int k = 1; k <= n; ++k) full.push_back(k);

    std::set<Family> out;
    std::vector<int> pick;
    auto sweep = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(pick.size()) == c) {
            Family fam;
            for (int idx : pick) fam.insert(blocks[idx]);
            for (const auto& b : fam)
                if (child_count(b, fam) < 2) return;
            if (child_count(full, fam) < 2) return;
            out.insert(fam);
            return;
        }
        for (size_t k = from; k < blocks.size(); ++k) {
            bool fits = true;
            for (int idx : pick)
                if (!nested_or_disjoint(blocks[idx], blocks[k])) fits = false;
            if (!fits) continue;
            pick.push_back(static_cast<int>(k));
            self(self, k + 1);
            pick.pop_back();
        }
    };
    sweep(sweep, 0);
    return out;
}

} // namespace

TEST_CASE("corolla shape") {
    StableTree t = StableTree::corolla(3);
    CHECK(t.arity() == 3);
    CHECK(t.codim() == 0);
    CHECK(t.num_vertices() == 1);
    CHECK(t.valences() == std::vector<int>{4});
    CHECK(t.edge_leafsets().empty());
    CHECK(t.key() == "(1,2,3)");
    CHECK_THROWS_AS(StableTree::corolla(1), std::invalid_argument);
}

TEST_CASE("graft adds one edge and relabels slots") {
    StableTree s = StableTree::corolla(2);
    StableTree t = StableTree::corolla(2);
    StableTree g1 = StableTree::graft(s, t, 1);
    CHECK(g1.arity() == 3);
    CHECK(g1.codim() == 1);
    CHECK(g1.edge_leafsets() == std::vector<std::vector<int>>{{1, 2}});
    StableTree g2 = StableTree::graft(s, t, 2);
    CHECK(g2.edge_leafsets() == std::vector<std::vector<int>>{{2, 3}});
    CHECK_THROWS_AS(StableTree::graft(s, t, 3), std::invalid_argument);
}

TEST_CASE("graft arity and codim bookkeeping over all small pairs") {
    for (int cs = 0; cs <= 1; ++cs)
        for (int ct = 0; ct <= 1; ++ct)
            for (const auto& s : enumerate_trees(3, cs))
                for (const auto& t : enumerate_trees(3, ct))
                    for (int i = 1; i <= 3; ++i) {
                        StableTree g = StableTree::graft(s, t, i);
                        CHECK(g.arity() == 5);
                        CHECK(g.codim() == cs + ct + 1);
                        CHECK(g.num_vertices() == s.num_vertices() + t.num_vertices());
                    }
}

TEST_CASE("divisor trees") {
    StableTree d = StableTree::divisor(4, {1, 2});
    CHECK(d.codim() == 1);
    CHECK(d.edge_leafsets() == std::vector<std::vector<int>>{{1, 2}});
    CHECK(d.key() == "((1,2),3,4)");
    CHECK_THROWS_AS(StableTree::divisor(4, {1}), std::invalid_argument);
    CHECK_THROWS_AS(StableTree::divisor(4, {1, 2, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(StableTree::divisor(4, {2, 5}), std::invalid_argument);
}

TEST_CASE("census matches the frozen counts") {
    CHECK(enumerate_trees(3, 1).size() == 3);
    CHECK(enumerate_trees(4, 1).size() == 10);
    CHECK(enumerate_trees(4, 2).size() == 15);
    CHECK(enumerate_trees(5, 1).size() == 25);
    CHECK(enumerate_trees(5, 2).size() == 105);
    CHECK(enumerate_trees(5, 3).size() == 105);
    for (int n = 3; n <= 6; ++n)
        CHECK(static_cast<i64>(enumerate_trees(n, 1).size()) == codim_one_census(n));
}

TEST_CASE("parallel, serial, and partition-count routes agree") {
    for (int n = 2; n <= 6; ++n)
        for (int c = 0; c <= n - 2; ++c) {
            const auto& fast = enumerate_trees(n, c);
            auto slow = enumerate_trees_serial(n, c);
            REQUIRE(fast.size() == slow.size());
            CHECK(std::equal(fast.begin(), fast.end(), slow.begin()));
            CHECK(static_cast<i64>(fast.size()) == census_independent(n, c));
        }
}

TEST_CASE("trees are exactly the nested stable families") {
    for (int n = 3; n <= 5; ++n)
        for (int c = 1; c <= std::min(3, n - 2); ++c) {
            std::set<Family> families = nested_families(n, c);
            std::set<Family> from_trees;
            for (const auto& t : enumerate_trees(n, c)) {
                auto sets = t.edge_leafsets();
                Family fam(sets.begin(), sets.end());
                REQUIRE(fam.size() == sets.size()); // edges carry distinct mark sets
                from_trees.insert(fam);
            }
            REQUIRE(from_trees.size() == enumerate_trees(n, c).size()); // families separate trees
            CHECK(families == from_trees);
        }
}

TEST_CASE("keys are unique and orderings are canonical") {
    for (int n = 2; n <= 5; ++n) {
        auto ts = all_trees(n);
        std::set<std::string> keys;
        for (const auto& t : ts) {
            keys.insert(t.key());
            auto sets = t.edge_leafsets();
            CHECK(std::is_sorted(sets.begin(), sets.end()));
            for (const auto& s : sets) {
                CHECK(std::is_sorted(s.begin(), s.end()));
                CHECK(!s.empty());
                CHECK(s.front() >= 1);
            }
            auto vals = t.valences();
            CHECK(std::is_sorted(vals.begin(), vals.end()));
            for (int v : vals) CHECK(v >= 3);
        }
        CHECK(keys.size() == ts.size());
    }
}

TEST_CASE("relabeling is a group action") {
    std::vector<int> ident{1, 2, 3};
    std::vector<std::vector<int>> perms;
    std::vector<int> p = ident;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    for (const auto& t : all_trees(3)) {
        CHECK(StableTree::sigma_act(ident, t) == t);
        for (const auto& a : perms)
            for (const auto& b : perms) {
                std::vector<int> ab(3);
                for (int k = 0; k < 3; ++k) ab[k] = a[b[k] - 1];
                CHECK(StableTree::sigma_act(a, StableTree::sigma_act(b, t)) == StableTree::sigma_act(ab, t));
            }
    }
}

TEST_CASE("block substitution matches its defining identity") {
    std::vector<std::vector<int>> sigmas, taus;
    std::vector<int> p{1, 2, 3};
    do sigmas.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<int> q{1, 2};
    do taus.push_back(q);
    while (std::next_permutation(q.begin(), q.end()));

    StableTree s = StableTree::divisor(3, {2, 3});
    StableTree t = StableTree::corolla(2);
    for (const auto& sigma : sigmas)
        for (const auto& tau : taus)
            for (int i = 1; i <= 3; ++i) {
                auto rho = block_compose(sigma, tau, i);
                CHECK(StableTree::graft(StableTree::sigma_act(sigma, s), StableTree::sigma_act(tau, t),
                                        sigma[i - 1]) ==
                      StableTree::sigma_act(rho, StableTree::graft(s, t, i)));
            }
}

TEST_CASE("refinement goes from deep strata to shallow ones") {
    StableTree top = StableTree::corolla(4);
    StableTree d = StableTree::divisor(4, {1, 2});
    CHECK(d.refines(top));
    CHECK(d.refines(d));
    CHECK(!top.refines(d));
    StableTree other = StableTree::divisor(4, {3, 4});
    CHECK(!d.refines(other));

    for (const auto& t : enumerate_trees(4, 2)) {
        CHECK(t.refines(top));
        int coarsenings = 0;
        for (const auto& e : enumerate_trees(4, 1))
            if (t.refines(e)) ++coarsenings;
        CHECK(coarsenings == 2); // contracting either edge, and nothing else
    }
}

TEST_CASE("axiom sweep is clean") {
    AxiomReport rep = check_graft_axioms(4);
    CHECK(rep.cases > 0);
    CHECK(rep.ok());
    if (!rep.ok())
        for (const auto& f : rep.failures) MESSAGE(f);
}

TEST_CASE("tree serialization") {
    StableTree d = StableTree::divisor(4, {1, 2});
    ojson j = tree_json(d);
    CHECK(j.at("arity") == 4);
    CHECK(j.at("codim") == 1);
    CHECK(j.at("leaves") == 5);
    CHECK(j.at("key") == "((1,2),3,4)");
    std::vector<std::vector<int>> edges = j.at("edges").get<std::vector<std::vector<int>>>();
    CHECK(edges == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {1, 3}, {0, 4}, {0, 5}});
    CHECK(j.at("labels").at("2") == 1);
    CHECK(j.at("labels").at("3") == 2);
    CHECK(j.at("labels").at("4") == 3);
    CHECK(j.at("labels").at("5") == 4);
    CHECK(j.at("edge_leafsets") == ojson::array({ojson::array({1, 2})}));
}
