#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ips/classify.hpp"
#include "ips/construct.hpp"
#include "test_support.hpp"

using ips::Integer;
using ips::Lattice;
using ips::LatticePoint;
using ips::PointSet;
using ips::test::load_corpus;

namespace {

// Direct scan oracle: every integer abscissa within the bound whose point on
// the axis is integral against the whole set.
std::vector<Integer> brute_force_axis(const PointSet& S, long bound) {
    std::vector<Integer> out;
    for (long t = -bound; t <= bound; ++t) {
        LatticePoint cand{t, 0};
        bool ok = true;
        for (std::size_t i = 0; i < S.size() && ok; ++i) {
            if (S[i] == cand) continue;
            ok = ips::is_integral_pair(cand, S[i], S.lattice());
        }
        if (ok) out.push_back(t);
    }
    return out;
}

std::vector<Integer> candidate_abscissas(const std::vector<ips::AxisCandidate>& cs) {
    std::vector<Integer> out;
    for (const auto& c : cs) out.push_back(c.t);
    return out;
}

}  // namespace

TEST_CASE("the two eight-point extensions cannot merge") {
    auto a = load_corpus("fig5a");
    auto b = load_corpus("fig5b");
    auto outcome = ips::merge(a, b);
    CHECK(!outcome.success);
    REQUIRE(!outcome.obstructions.empty());
    bool found = false;
    for (const auto& o : outcome.obstructions) {
        CHECK(o.numerator == 5126416);
        CHECK(o.squarefree == 320401);
        if ((o.from_a == LatticePoint{340, 0} && o.from_b == LatticePoint{1767, 147}))
            found = true;
    }
    CHECK(found);
    // exactly the two sign-symmetric crossings obstruct
    CHECK(outcome.obstructions.size() == 2);
}

TEST_CASE("merging a set with itself returns the set") {
    auto p9 = load_corpus("p9");
    auto outcome = ips::merge(p9, p9);
    REQUIRE(outcome.success);
    CHECK(*outcome.merged == p9);
}

TEST_CASE("merge reconciles different denominators of one plane set") {
    auto p9 = load_corpus("p9");
    std::vector<LatticePoint> doubled;
    for (const auto& pt : p9.points()) doubled.push_back({2 * pt.x, 2 * pt.y});
    PointSet same_plane(Lattice(1, 2), std::move(doubled));
    auto outcome = ips::merge(p9, same_plane);
    REQUIRE(outcome.success);
    CHECK(ips::normalize(*outcome.merged) == ips::normalize(p9));
}

TEST_CASE("merge refuses mismatched radicands") {
    CHECK_THROWS_AS(ips::merge(load_corpus("p9"), load_corpus("p8y")), ips::LatticeMismatchError);
}

TEST_CASE("dilated P42 and P46 merge into P48") {
    auto a = ips::dilate(load_corpus("p42"), 29);
    auto b = ips::dilate(load_corpus("p46"), 23);
    auto outcome = ips::merge(a, b);
    REQUIRE(outcome.success);
    // the merged set contains both inputs
    for (const auto& pt : a.points()) CHECK(outcome.merged->contains(pt));
    for (const auto& pt : b.points()) CHECK(outcome.merged->contains(pt));
    CHECK(ips::normalize(*outcome.merged) == ips::normalize(load_corpus("p48")));
}

TEST_CASE("axis extension around a single anchor") {
    PointSet anchor(Lattice(1, 1), {{0, 4}});
    auto cs = ips::extend_on_axis(anchor);
    // N = 16: pair (2,8) gives t = +-3 at distance 5, pair (4,4) gives t = 0
    // at distance 4; (1,16) has mixed parity
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].t == -3);
    CHECK(cs[0].distances == std::vector<Integer>{5});
    CHECK(cs[1].t == 0);
    CHECK(cs[1].distances == std::vector<Integer>{4});
    CHECK(cs[2].t == 3);
    CHECK(cs[2].distances == std::vector<Integer>{5});

    auto bounded = ips::extend_on_axis(anchor, Integer(2));
    REQUIRE(bounded.size() == 1);
    CHECK(bounded[0].t == 0);
}

TEST_CASE("axis extension equals the direct scan on fixed small sets") {
    PointSet S1(Lattice(1, 1), {{0, 0}, {3, 0}, {0, 4}});
    CHECK(candidate_abscissas(ips::extend_on_axis(S1, Integer(1000))) ==
          brute_force_axis(S1, 1000));

    PointSet S2(Lattice(3, 2), {{0, 0}, {2, 0}, {1, 1}});
    CHECK(candidate_abscissas(ips::extend_on_axis(S2, Integer(500))) == brute_force_axis(S2, 500));

    PointSet S3(Lattice(143, 2), {{1620, 0}, {-1620, 0}, {1920, 300}});
    CHECK(candidate_abscissas(ips::extend_on_axis(S3, Integer(4000))) ==
          brute_force_axis(S3, 4000));
}

TEST_CASE("an anchor numerator of 2 mod 4 forces an empty result") {
    PointSet S(Lattice(2, 1), {{0, 0}, {5, 0}, {0, 1}});  // N = 2*1^2 = 2
    CHECK(ips::extend_on_axis(S).empty());
    CHECK(brute_force_axis(S, 2000).empty());
}

TEST_CASE("axis extension requires an off-axis anchor") {
    PointSet line(Lattice(1, 1), {{0, 0}, {5, 0}});
    CHECK_THROWS_AS(ips::extend_on_axis(line), ips::CollinearSetError);
}

TEST_CASE("every accepted axis candidate verifies against the whole set") {
    auto p10 = load_corpus("p10");
    auto cs = ips::extend_on_axis(p10);
    CHECK(!cs.empty());
    bool saw_existing = false;
    for (const auto& c : cs) {
        if (c.already_present) {
            saw_existing = true;
            continue;
        }
        std::vector<LatticePoint> pts = p10.points();
        pts.push_back({c.t, 0});
        PointSet extended(p10.lattice(), std::move(pts));
        CHECK(ips::verify(extended).is_integral);
    }
    CHECK(saw_existing);  // P10's own axis points are reported and flagged
}

TEST_CASE("reflection extension") {
    // a lone off-axis point over three axis points symmetrizes cleanly
    PointSet S(Lattice(1, 1), {{-3, 0}, {0, 0}, {3, 0}, {0, 4}});
    auto ok = ips::reflect_extend(S);
    REQUIRE(ok.success);
    CHECK(ok.merged->contains({0, -4}));
    CHECK(ok.merged->size() == 5);
    auto axes = ips::symmetry_axes(*ok.merged);
    REQUIRE(!axes.empty());

    // P17 is already symmetric: the reflection adds nothing
    auto p17 = load_corpus("p17");
    auto same = ips::reflect_extend(p17);
    REQUIRE(same.success);
    CHECK(*same.merged == p17);

    // P8 refuses
    auto p8 = load_corpus("p8");
    auto failed = ips::reflect_extend(p8);
    CHECK(!failed.success);
    CHECK(!failed.obstructions.empty());
}

TEST_CASE("alignment factors recover the P48 construction") {
    auto p42 = load_corpus("p42");
    auto p46 = load_corpus("p46");
    // pair the off-line points: (219513840, -15069600) <-> (276778320, -19000800)
    std::size_t ia = 0, ib = 0;
    for (std::size_t i = 0; i < p42.size(); ++i)
        if (p42[i] == LatticePoint{219513840, -15069600}) ia = i;
    for (std::size_t i = 0; i < p46.size(); ++i)
        if (p46[i] == LatticePoint{276778320, -19000800}) ib = i;
    auto factors = ips::align_for_merge(p42, p46, {{ia, ib}});
    CHECK(factors.k_a == 29);
    CHECK(factors.k_b == 23);
    // independent route: the reduced coordinate ratio
    CHECK(Integer(276778320) / boost::multiprecision::gcd(Integer(276778320), Integer(219513840)) == 29);
}

TEST_CASE("alignment of identical points is trivial") {
    PointSet A(Lattice(1, 1), {{4, 6}});
    auto f = ips::align_for_merge(A, A, {{0, 0}});
    CHECK(f.k_a == 1);
    CHECK(f.k_b == 1);
}

TEST_CASE("alignment rejects inconsistent pairings") {
    PointSet A(Lattice(1, 1), {{1, 0}, {0, 1}});
    PointSet B(Lattice(1, 1), {{2, 0}, {0, 3}});
    CHECK_THROWS_AS(ips::align_for_merge(A, B, {{0, 0}, {1, 1}}), ips::Error);

    PointSet C(Lattice(1, 1), {{-2, 0}, {0, 3}});
    CHECK_THROWS_AS(ips::align_for_merge(A, C, {{0, 0}}), ips::Error);
}

TEST_CASE("shrink inverts dilation") {
    auto p9 = load_corpus("p9");
    auto r = ips::shrink(ips::dilate(p9, 23));
    CHECK(r.factor == 23);
    CHECK(r.reduced == p9);

    auto prim = ips::shrink(p9);
    CHECK(prim.factor == 1);
    CHECK(prim.reduced == p9);
}

TEST_CASE("shrink extracts the true coordinate gcd") {
    // P42 grew out of a dilation by 23, but the axis search added points
    // whose abscissas are not multiples of 23 (117312468 = 23*5100542 + 2),
    // so the set as listed is primitive.
    CHECK(Integer(117312468) % 23 == 2);
    auto p42 = load_corpus("p42");
    Integer g = 0;
    for (const auto& pt : p42.points()) {
        g = boost::multiprecision::gcd(g, pt.x);
        g = boost::multiprecision::gcd(g, pt.y);
    }
    auto r42 = ips::shrink(p42);
    CHECK(r42.factor == std::max(g, Integer(1)));
    CHECK(r42.factor == 1);
    CHECK(r42.reduced == p42);

    // a true multiple shrinks back
    auto tripled = ips::shrink(ips::dilate(p42, 3));
    CHECK(tripled.factor == 3);
    CHECK(tripled.reduced == p42);
}
