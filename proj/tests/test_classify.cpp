#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "ips/classify.hpp"
#include "test_support.hpp"

using ips::Integer;
using ips::Lattice;
using ips::LatticePoint;
using ips::PointSet;
using ips::test::load_corpus;

namespace {

PointSet rectangle_345() {
    return PointSet(Lattice(1, 1), {{0, 0}, {3, 0}, {0, 4}, {3, 4}});
}

PointSet unit_equilateral() { return PointSet(Lattice(3, 2), {{0, 0}, {2, 0}, {1, 1}}); }

// Independent exhaustive minimum line cover: try all subsets of the distinct
// point-pair lines of size up to 4.
std::size_t brute_force_lines_cover(const PointSet& S) {
    const std::size_t n = S.size();
    std::map<std::tuple<Integer, Integer, Integer>, std::vector<std::size_t>> lines;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Integer a = S[j].y - S[i].y;
            Integer b = S[i].x - S[j].x;
            Integer g = boost::multiprecision::gcd(abs(a), abs(b));
            if (g > 1) {
                a /= g;
                b /= g;
            }
            if (a < 0 || (a == 0 && b < 0)) {
                a = -a;
                b = -b;
            }
            lines[{a, b, a * S[i].x + b * S[i].y}].push_back(i);
            lines[{a, b, a * S[i].x + b * S[i].y}].push_back(j);
        }
    std::vector<std::set<std::size_t>> covers;
    for (auto& [key, members] : lines) covers.emplace_back(members.begin(), members.end());
    const std::size_t m = covers.size();
    auto covered_by = [&](const std::vector<std::size_t>& pick) {
        std::set<std::size_t> got;
        for (std::size_t li : pick) got.insert(covers[li].begin(), covers[li].end());
        return got.size() == n;
    };
    for (std::size_t k = 1; k <= 4; ++k) {
        std::vector<std::size_t> idx(k);
        // odometer over k-subsets of [0, m)
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        if (k > m) break;
        for (;;) {
            if (covered_by(idx)) return k;
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return 5;  // "more than 4": outside the oracle's range
}

}  // namespace

TEST_CASE("collinearity predicate") {
    CHECK(ips::collinear({0, 0}, {1445, 0}, {1085, 0}));
    CHECK(!ips::collinear({0, 0}, {3, 0}, {0, 4}));
    CHECK(ips::collinear({2, 5}, {2, 5}, {9, 1}));  // degenerate triple
}

TEST_CASE("concyclicity predicate") {
    Lattice L(1, 1);
    CHECK(ips::concyclic({0, 0}, {3, 0}, {0, 4}, {3, 4}, L));
    CHECK(!ips::concyclic({0, 0}, {1, 0}, {2, 0}, {3, 4}, L));  // collinear triple
    // circumcircle of (0,0),(3,0),(0,4) has center (3/2, 2); (1,1) misses it
    CHECK(!ips::concyclic({0, 0}, {3, 0}, {0, 4}, {1, 1}, L));

    // the sqrt(p) column must be handled: a 42-lattice rectangle analogue
    Lattice L42(42, 1);
    CHECK(ips::concyclic({0, 0}, {5, 0}, {0, 2}, {5, 2}, L42));
}

TEST_CASE("max_collinear counts the big line of P42") {
    auto p42 = load_corpus("p42");
    std::size_t on_axis = 0;
    for (const auto& pt : p42.points())
        if (pt.y == 0) ++on_axis;
    CHECK(on_axis == 40);  // independent count straight from the data
    CHECK(ips::max_collinear(p42) == 40);

    CHECK(ips::max_collinear(load_corpus("p9")) == 5);
    CHECK(ips::max_collinear(rectangle_345()) == 2);
}

TEST_CASE("exact line covers match the exhaustive oracle") {
    auto p9 = load_corpus("p9");
    CHECK(brute_force_lines_cover(p9) == 3);
    CHECK(ips::lines_cover(p9) == 3);

    CHECK(ips::lines_cover(rectangle_345()) == 2);
    CHECK(brute_force_lines_cover(rectangle_345()) == 2);

    for (const char* name : {"p10", "p8", "p8y", "fig5a", "fig5b", "fig5c", "p17"}) {
        auto S = load_corpus(name);
        CHECK(ips::lines_cover(S) == brute_force_lines_cover(S));
        CHECK(ips::max_collinear(S) >= 2);
    }
}

TEST_CASE("facher detection") {
    PointSet tri(Lattice(1, 1), {{0, 0}, {3, 0}, {0, 4}});
    CHECK(ips::is_facher(tri));
    CHECK(!ips::is_facher(load_corpus("p42")));  // the off-line pair has two points
    CHECK(!ips::is_facher(rectangle_345()));
}

TEST_CASE("rails detection") {
    CHECK(ips::is_rails(load_corpus("p42")));
    CHECK(ips::is_rails(load_corpus("p46")));
    CHECK(ips::is_rails(load_corpus("p48")));
    PointSet tri(Lattice(1, 1), {{0, 0}, {3, 0}, {0, 4}});
    CHECK(!ips::is_rails(tri));
    CHECK(!ips::is_rails(load_corpus("p9")));
    // two parallel lines with 2 + 2 points
    CHECK(ips::is_rails(rectangle_345()));
}

TEST_CASE("circular detection") {
    CHECK(ips::is_circular(rectangle_345()));
    CHECK(!ips::is_circular(load_corpus("p9")));
    CHECK(!ips::is_circular(load_corpus("p8y")));
    CHECK(ips::is_circular(unit_equilateral()));
}

TEST_CASE("semi-general and general position") {
    CHECK(ips::semi_general_position(rectangle_345()));
    CHECK(!ips::general_position(rectangle_345()));
    CHECK(!ips::semi_general_position(load_corpus("p9")));
    CHECK(!ips::general_position(load_corpus("p9")));
    CHECK(ips::semi_general_position(unit_equilateral()));
    CHECK(ips::general_position(unit_equilateral()));
}

TEST_CASE("symmetry axes of the corpus sets") {
    using O = ips::SymmetryAxis::Orientation;

    auto p19 = ips::symmetry_axes(load_corpus("p19"));
    REQUIRE(p19.size() == 2);
    CHECK(p19[0].orientation == O::horizontal);
    CHECK(p19[0].position_num == 0);
    CHECK(p19[1].orientation == O::vertical);
    CHECK(p19[1].position_num == 0);

    auto p17 = ips::symmetry_axes(load_corpus("p17"));
    REQUIRE(p17.size() == 1);
    CHECK(p17[0].orientation == O::horizontal);
    CHECK(p17[0].position_num == 0);

    auto p8y = ips::symmetry_axes(load_corpus("p8y"));
    REQUIRE(p8y.size() == 1);
    CHECK(p8y[0].orientation == O::vertical);
    CHECK(p8y[0].position_num == 0);

    CHECK(ips::symmetry_axes(load_corpus("p8")).empty());
}

TEST_CASE("off-center symmetry positions are exact rationals") {
    // mirror pair around x = 5/2
    PointSet S(Lattice(1, 1), {{0, 0}, {5, 0}, {2, 3}, {3, 3}});
    auto axes = ips::symmetry_axes(S);
    REQUIRE(axes.size() == 1);
    CHECK(axes[0].orientation == ips::SymmetryAxis::Orientation::vertical);
    CHECK(axes[0].position_num == 5);
    CHECK(axes[0].position_den == 2);
}

TEST_CASE("P17 keeps three points sharing one abscissa") {
    auto p17 = load_corpus("p17");
    std::map<Integer, int> by_x;
    for (const auto& pt : p17.points()) ++by_x[pt.x];
    CHECK(std::any_of(by_x.begin(), by_x.end(), [](const auto& kv) { return kv.second == 3; }));
}

TEST_CASE("classification aggregates") {
    auto r42 = ips::classify(load_corpus("p42"));
    CHECK(r42.cardinality == 42);
    CHECK(r42.diameter == Integer("2473117504"));
    CHECK(r42.characteristic == 154);
    CHECK(r42.is_rails);
    CHECK(!r42.is_facher);
    CHECK(!r42.semi_general);

    auto r17 = ips::classify(load_corpus("p17"));
    CHECK(r17.cardinality == 17);
    CHECK(r17.diameter == 1024296);
    CHECK(r17.characteristic == 1);
    REQUIRE(r17.symmetry_axes.size() == 1);
    CHECK(r17.symmetry_axes[0].orientation == ips::SymmetryAxis::Orientation::horizontal);

    auto tri = ips::classify(unit_equilateral());
    CHECK(tri.cardinality == 3);
    CHECK(tri.diameter == 1);
    CHECK(tri.characteristic == 3);
    CHECK(tri.general);
}

TEST_CASE("classification flags are invariant under motions and dilation") {
    auto p10 = load_corpus("p10");
    auto base = ips::classify(p10);
    for (const auto& moved : {ips::dilate(p10, 13), ips::translate(p10, -99, 7),
                              ips::reflect_x(p10), ips::reflect_y(p10)}) {
        auto r = ips::classify(moved);
        CHECK(r.max_collinear == base.max_collinear);
        CHECK(r.lines_cover == base.lines_cover);
        CHECK(r.is_facher == base.is_facher);
        CHECK(r.is_rails == base.is_rails);
        CHECK(r.is_circular == base.is_circular);
        CHECK(r.semi_general == base.semi_general);
        CHECK(r.general == base.general);
        CHECK(r.characteristic == base.characteristic);
    }
    CHECK(ips::classify(ips::dilate(p10, 13)).diameter == 13 * base.diameter);
}

TEST_CASE("classify rejects invalid sets") {
    PointSet bad(Lattice(1, 1), {{0, 0}, {1, 1}, {5, 0}});
    CHECK_THROWS_AS(ips::classify(bad), ips::Error);
}
