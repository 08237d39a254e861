#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "logcurves/logspace.hpp"
#include "logcurves/trees.hpp"

using namespace logcurves;

TEST_CASE("log point and its powers") {
    NCLogDescriptor pt = pt_log();
    CHECK(pt.base_dim == 0);
    CHECK(pt.fiber_dim() == 1);
    CHECK(pt.log_dim() == 1);
    CHECK(pt.strata.size() == 1);
    CHECK(pt.divisor_tags().empty());

    NCLogDescriptor p3 = pt_log_power(3);
    CHECK(p3.bundles == std::vector<std::string>{"L1", "L2", "L3"});
    CHECK(p3.log_dim() == 3);
    CHECK(pt_log_power(0).fiber_dim() == 0);
    CHECK_THROWS_AS(pt_log_power(-1), std::invalid_argument);
}

TEST_CASE("marked projective line") {
    NCLogDescriptor d = p1_with_points(2);
    CHECK(d.base_dim == 1);
    CHECK(d.fiber_dim() == 0);
    CHECK(d.strata.size() == 3);
    CHECK(d.divisor_tags() == std::vector<std::string>{"p1", "p2"});
    CHECK(d.stratum("p1").codim == 1);
    CHECK(d.stratum("U").codim == 0);
    CHECK(!d.has_stratum("p3"));
    CHECK_THROWS_AS(d.stratum("p3"), std::invalid_argument);
}

TEST_CASE("moduli descriptor") {
    NCLogDescriptor d = moduli_descriptor(4);
    CHECK(d.base_dim == 2);
    CHECK(d.fiber_dim() == 5);
    CHECK(d.log_dim() == 7);
    CHECK(d.strata.size() == 1 + 10 + 15);
    CHECK(d.divisor_tags().size() == 10);
    CHECK(d.bundles.front() == "L0");
    CHECK(d.bundles.back() == "L4");
    // the open stratum has no divisors; codim-1 strata name themselves
    int open = 0, self_named = 0;
    for (const auto& s : d.strata) {
        if (s.codim == 0) {
            ++open;
            CHECK(s.divisors.empty());
        }
        if (s.codim == 1 && s.divisors == std::vector<std::string>{s.tag}) ++self_named;
        CHECK(static_cast<int>(s.divisors.size()) == s.codim);
    }
    CHECK(open == 1);
    CHECK(self_named == 10);

    NCLogDescriptor unit = moduli_descriptor(1);
    CHECK(unit.base_dim == 0);
    CHECK(unit.fiber_dim() == 1);
}

TEST_CASE("map classification") {
    CHECK_THROWS_AS(classify_maps(pt_log(), p1_with_points(1)), std::invalid_argument);

    auto empty = classify_maps(p1_with_points(1), p1_with_points(2));
    REQUIRE(std::holds_alternative<EmptyFamily>(empty));
    CHECK(std::get<EmptyFamily>(empty).reason.find("p2") != std::string::npos);

    auto forget = classify_maps(p1_with_points(2), p1_with_points(1));
    REQUIRE(std::holds_alternative<MapFamily>(forget));
    CHECK(!std::get<MapFamily>(forget).positivity_required);

    auto power = classify_maps(pt_log_power(2), pt_log_power(3));
    REQUIRE(std::holds_alternative<MapFamily>(power));
    const auto& fam = std::get<MapFamily>(power);
    CHECK(fam.source_bundles == 2);
    CHECK(fam.target_bundles == 3);
    CHECK(fam.positivity_required);

    IntMatrix good(2, 3);
    for (auto& v : good.data) v = 1;
    CHECK(matrix_in_family(fam, good));
    IntMatrix zero(2, 3);
    CHECK(!matrix_in_family(fam, zero));
    IntMatrix wrong(3, 2);
    for (auto& v : wrong.data) v = 1;
    CHECK(!matrix_in_family(fam, wrong));
    IntMatrix negative(2, 3);
    negative.data.assign(6, 1);
    negative.at(0, 0) = -1;
    CHECK(!matrix_in_family(fam, negative));
}

TEST_CASE("exponent matrices compose by product") {
    IntMatrix two(1, 1), three(1, 1);
    two.at(0, 0) = 2;
    three.at(0, 0) = 3;
    CHECK(matmul(two, three).at(0, 0) == 6);

    IntMatrix a(2, 3), b(3, 2), c(2, 2);
    for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 3; ++col) a.at(r, col) = r + col + 1;
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 2; ++col) b.at(r, col) = 2 * r + col;
    for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col) c.at(r, col) = r * col + 1;
    CHECK(matmul(matmul(a, b), c) == matmul(a, matmul(b, c)));
    CHECK(matmul(IntMatrix::identity(2), a) == a);
    CHECK(matmul(a, IntMatrix::identity(3)) == a);
    CHECK_THROWS_AS(matmul(a, c), std::invalid_argument);
}

TEST_CASE("restriction to a divisor") {
    NCLogDescriptor d = moduli_descriptor(4);
    std::string tag;
    for (const auto& s : d.strata)
        if (s.codim == 1) {
            tag = s.tag;
            break;
        }
    REQUIRE(!tag.empty());

    NCLogDescriptor r = pullback_along_stratum(d, tag);
    CHECK(r.base_dim == 1);
    CHECK(r.fiber_dim() == 6);
    CHECK(r.log_dim() == d.log_dim()); // restriction trades base for normal directions
    CHECK(r.bundles.back() == normal_label(tag));
    CHECK(r.stratum(tag).codim == 0);
    CHECK(r.stratum(tag).divisors.empty());
    for (const auto& s : r.strata) CHECK(d.stratum(s.tag).codim == s.codim + 1);

    // restriction along the open stratum is the identity
    std::string open_tag;
    for (const auto& s : d.strata)
        if (s.codim == 0) open_tag = s.tag;
    NCLogDescriptor same = pullback_along_stratum(d, open_tag);
    CHECK(same.base == d.base);
    CHECK(same.bundles == d.bundles);
    CHECK(same.strata.size() == d.strata.size());
}

TEST_CASE("iterated restriction agrees with direct restriction") {
    NCLogDescriptor d = moduli_descriptor(4);
    int tested = 0;
    for (const auto& z : d.strata) {
        if (z.codim != 2) continue;
        for (const auto& first : z.divisors) {
            NCLogDescriptor step1 = pullback_along_stratum(d, first);
            REQUIRE(step1.has_stratum(z.tag));
            NCLogDescriptor two_step = pullback_along_stratum(step1, z.tag);
            NCLogDescriptor direct = pullback_along_stratum(d, z.tag);

            CHECK(two_step.base_dim == direct.base_dim);
            CHECK(two_step.log_dim() == direct.log_dim());
            auto b1 = two_step.bundles, b2 = direct.bundles;
            std::sort(b1.begin(), b1.end());
            std::sort(b2.begin(), b2.end());
            CHECK(b1 == b2);

            REQUIRE(two_step.strata.size() == direct.strata.size());
            for (size_t k = 0; k < direct.strata.size(); ++k) {
                CHECK(two_step.strata[k].tag == direct.strata[k].tag);
                CHECK(two_step.strata[k].codim == direct.strata[k].codim);
                CHECK(two_step.strata[k].divisors == direct.strata[k].divisors);
            }
            ++tested;
        }
    }
    CHECK(tested > 0);
}

TEST_CASE("normal labels") {
    CHECK(normal_label("((1,2),3,4)") == "N(((1,2),3,4))");
}
