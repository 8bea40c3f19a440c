#include "ips/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ips {

namespace {

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

std::string point_to_string(const LatticePoint& pt) {
    std::ostringstream os;
    os << "(" << pt.x << "; " << pt.y << ")";
    return os.str();
}

}  // namespace

Lattice::Lattice(Integer radicand, Integer denominator)
    : p(std::move(radicand)), q(std::move(denominator)) {
    if (p < 1) throw Error("lattice radicand must be positive");
    if (q < 1) throw Error("lattice denominator must be positive");
    if (squarefree_part(p).root != 1)
        throw Error("lattice radicand must be squarefree (absorb the square part first)");
}

PointSet::PointSet(Lattice lattice, std::vector<LatticePoint> points)
    : lattice_(std::move(lattice)), points_(std::move(points)) {
    std::map<LatticePoint, std::size_t> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        auto [it, inserted] = seen.emplace(points_[i], i);
        if (!inserted) {
            std::ostringstream os;
            os << "duplicate point " << point_to_string(points_[i]) << " at indices "
               << it->second << " and " << i;
            throw DuplicatePointError(it->second, i, os.str());
        }
    }
    std::sort(points_.begin(), points_.end());
}

PointSet PointSet::absorbing_radicand(const Integer& radicand, const Integer& denominator,
                                      std::vector<LatticePoint> points, bool* absorbed) {
    if (radicand < 1) throw Error("lattice radicand must be positive");
    SquarefreeDecomposition d = squarefree_part(radicand);
    if (absorbed) *absorbed = d.root != 1;
    if (d.root != 1)
        for (LatticePoint& pt : points) pt.y *= d.root;
    return PointSet(Lattice(d.squarefree, denominator), std::move(points));
}

bool PointSet::contains(const LatticePoint& pt) const {
    return std::binary_search(points_.begin(), points_.end(), pt);
}

Integer squared_numerator(const LatticePoint& a, const LatticePoint& b, const Lattice& L) {
    Integer dx = a.x - b.x;
    Integer dy = a.y - b.y;
    return dx * dx + L.p * dy * dy;
}

bool is_integral_pair(const LatticePoint& a, const LatticePoint& b, const Lattice& L) {
    IsqrtResult r = isqrt(squared_numerator(a, b, L));
    return r.exact && r.root % L.q == 0;
}

bool has_noncollinear_triple(const PointSet& S) {
    if (S.size() < 3) return false;
    // All points are off the line through points 0 and 1, or none are.
    const LatticePoint& a = S[0];
    const LatticePoint& b = S[1];
    for (std::size_t k = 2; k < S.size(); ++k) {
        const LatticePoint& c = S[k];
        if ((a.x - c.x) * (b.y - c.y) != (b.x - c.x) * (a.y - c.y)) return true;
    }
    return false;
}

VerifyReport verify(const PointSet& S) {
    VerifyReport report;
    const std::size_t n = S.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            ++report.total_pairs;
            Integer N = squared_numerator(S[i], S[j], S.lattice());
            IsqrtResult r = isqrt(N);
            if (!r.exact || r.root % S.lattice().q != 0)
                report.violations.push_back(
                    {i, j, N, squarefree_part(N).squarefree});
        }
    }
    report.is_integral = report.violations.empty();
    report.is_noncollinear = has_noncollinear_triple(S);
    return report;
}

Integer exact_distance(const PointSet& S, std::size_t i, std::size_t j) {
    Integer N = squared_numerator(S[i], S[j], S.lattice());
    IsqrtResult r = isqrt(N);
    if (!r.exact || r.root % S.lattice().q != 0) {
        std::ostringstream os;
        os << "non-integral distance between " << point_to_string(S[i]) << " and "
           << point_to_string(S[j]) << ": squared numerator " << N;
        throw NonIntegralSetError(os.str());
    }
    return r.root / S.lattice().q;
}

Integer diameter(const PointSet& S) {
    Integer best = 0;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            best = std::max(best, exact_distance(S, i, j));
    return best;
}

PointSet normalize(const PointSet& S) {
    Integer p = S.lattice().p;
    Integer q = S.lattice().q;
    std::vector<LatticePoint> pts = S.points();

    // p is squarefree by construction; still, a fully zero ordinate column
    // carries no sqrt(p) at all.
    bool all_y_zero = true;
    for (const LatticePoint& pt : pts)
        if (pt.y != 0) all_y_zero = false;
    if (all_y_zero) p = 1;

    Integer g = q;
    for (const LatticePoint& pt : pts) {
        g = gcd(g, pt.x);
        g = gcd(g, pt.y);
        if (g == 1) break;
    }
    if (g > 1) {
        q /= g;
        for (LatticePoint& pt : pts) {
            pt.x /= g;
            pt.y /= g;
        }
    }
    return PointSet(Lattice(p, q), std::move(pts));
}

PointSet dilate(const PointSet& S, const Integer& k) {
    if (k < 1) throw Error("dilation factor must be a positive integer");
    std::vector<LatticePoint> pts = S.points();
    for (LatticePoint& pt : pts) {
        pt.x *= k;
        pt.y *= k;
    }
    return PointSet(S.lattice(), std::move(pts));
}

PointSet translate(const PointSet& S, const Integer& dx, const Integer& dy) {
    std::vector<LatticePoint> pts = S.points();
    for (LatticePoint& pt : pts) {
        pt.x += dx;
        pt.y += dy;
    }
    return PointSet(S.lattice(), std::move(pts));
}

PointSet reflect_x(const PointSet& S) {
    std::vector<LatticePoint> pts = S.points();
    for (LatticePoint& pt : pts) pt.y = -pt.y;
    return PointSet(S.lattice(), std::move(pts));
}

PointSet reflect_y(const PointSet& S) {
    std::vector<LatticePoint> pts = S.points();
    for (LatticePoint& pt : pts) pt.x = -pt.x;
    return PointSet(S.lattice(), std::move(pts));
}

RotationOutcome rotate90(const PointSet& S) {
    PointSet N = normalize(S);
    if (N.lattice().p != 1) return {std::nullopt, N.lattice().p};
    std::vector<LatticePoint> pts;
    pts.reserve(N.size());
    for (const LatticePoint& pt : N.points()) pts.push_back({-pt.y, pt.x});
    return {PointSet(N.lattice(), std::move(pts)), Integer(1)};
}

}  // namespace ips
