#include "ips/classify.hpp"

#include "ips/characteristic.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <tuple>

namespace ips {

namespace {

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

// Structural scans index points with fixed-width masks; far beyond desk scale
// anyway.
constexpr std::size_t kMaxClassifyPoints = 256;

struct Mask {
    std::array<std::uint64_t, 4> w{};

    void set(std::size_t i) { w[i >> 6] |= 1ull << (i & 63); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto v : w) c += std::popcount(v);
        return c;
    }
    bool empty() const { return w[0] == 0 && w[1] == 0 && w[2] == 0 && w[3] == 0; }
    std::size_t first() const {
        for (std::size_t b = 0; b < 4; ++b)
            if (w[b]) return b * 64 + std::countr_zero(w[b]);
        return kMaxClassifyPoints;
    }
    Mask and_not(const Mask& o) const {
        Mask r;
        for (std::size_t b = 0; b < 4; ++b) r.w[b] = w[b] & ~o.w[b];
        return r;
    }
    Mask intersect(const Mask& o) const {
        Mask r;
        for (std::size_t b = 0; b < 4; ++b) r.w[b] = w[b] & o.w[b];
        return r;
    }
};

// A*x + B*y = C with (A, B) reduced and sign-canonical, so equal lines get
// equal keys.
struct LineKey {
    Integer a, b, c;
    bool operator<(const LineKey& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

LineKey line_through(const LatticePoint& p1, const LatticePoint& p2) {
    Integer a = p2.y - p1.y;
    Integer b = p1.x - p2.x;
    Integer g = gcd(abs(a), abs(b));
    if (g > 1) {
        a /= g;
        b /= g;
    }
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return {a, b, a * p1.x + b * p1.y};
}

struct LineSet {
    std::vector<Mask> masks;                 // points on each distinct line
    std::vector<std::pair<Integer, Integer>> directions;  // (A, B) per line
};

LineSet distinct_lines(const PointSet& S) {
    if (S.size() > kMaxClassifyPoints)
        throw ResourceLimitError("structural classification supports at most 256 points");
    std::map<LineKey, Mask> by_key;
    const std::size_t n = S.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            LineKey key = line_through(S[i], S[j]);
            Mask& m = by_key[key];
            m.set(i);
            m.set(j);
        }
    LineSet out;
    for (auto& [key, mask] : by_key) {
        out.masks.push_back(mask);
        out.directions.emplace_back(key.a, key.b);
    }
    return out;
}

bool cover_possible(const std::vector<Mask>& lines, const Mask& uncovered, std::size_t k) {
    const std::size_t left = uncovered.count();
    if (left == 0) return true;
    if (k == 0) return false;
    if (left <= 2 * k) return true;  // two leftover points per line always work
    std::size_t best = 0;
    for (const Mask& line : lines) best = std::max(best, line.intersect(uncovered).count());
    if (best * k < left) return false;
    const std::size_t pivot = uncovered.first();
    for (const Mask& line : lines) {
        if (!line.test(pivot)) continue;
        if (line.intersect(uncovered).count() < 2) continue;
        if (cover_possible(lines, uncovered.and_not(line), k - 1)) return true;
    }
    return false;
}

}  // namespace

bool collinear(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return (a.x - c.x) * (b.y - c.y) == (b.x - c.x) * (a.y - c.y);
}

bool concyclic(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
               const LatticePoint& d, const Lattice& L) {
    if (collinear(a, b, c)) return false;
    // Rows (x^2 + p*y^2, x, y) after subtracting point d; the sqrt(p) column
    // factor cancels out of the zero test.
    std::array<std::array<Integer, 3>, 3> m;
    const std::array<const LatticePoint*, 3> pts{&a, &b, &c};
    for (std::size_t r = 0; r < 3; ++r) {
        Integer dx = pts[r]->x - d.x;
        Integer dy = pts[r]->y - d.y;
        m[r][0] = dx * (pts[r]->x + d.x) + L.p * dy * (pts[r]->y + d.y);
        m[r][1] = dx;
        m[r][2] = dy;
    }
    Integer det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return det == 0;
}

std::size_t max_collinear(const PointSet& S) {
    const std::size_t n = S.size();
    if (n <= 2) return n;
    std::size_t best = 2;
    for (std::size_t i = 0; i < n; ++i) {
        std::map<std::pair<Integer, Integer>, std::size_t> directions;
        for (std::size_t j = i + 1; j < n; ++j) {
            Integer dx = S[j].x - S[i].x;
            Integer dy = S[j].y - S[i].y;
            Integer g = gcd(abs(dx), abs(dy));
            if (g > 1) {
                dx /= g;
                dy /= g;
            }
            if (dx < 0 || (dx == 0 && dy < 0)) {
                dx = -dx;
                dy = -dy;
            }
            best = std::max(best, ++directions[{dx, dy}] + 1);
        }
    }
    return best;
}

std::size_t lines_cover(const PointSet& S) {
    const std::size_t n = S.size();
    if (n <= 2) return n == 0 ? 0 : 1;
    LineSet lines = distinct_lines(S);
    Mask all;
    for (std::size_t i = 0; i < n; ++i) all.set(i);

    std::size_t biggest = 0;
    for (const Mask& m : lines.masks) biggest = std::max(biggest, m.count());
    if (biggest == n) return 1;

    // Greedy peeling gives the upper bound for the exact search.
    std::size_t upper = 0;
    Mask uncovered = all;
    while (!uncovered.empty()) {
        std::size_t best = 0, best_idx = 0;
        for (std::size_t li = 0; li < lines.masks.size(); ++li) {
            std::size_t c = lines.masks[li].intersect(uncovered).count();
            if (c > best) best = c, best_idx = li;
        }
        if (best < 2) {
            upper += (uncovered.count() + 1) / 2;
            break;
        }
        uncovered = uncovered.and_not(lines.masks[best_idx]);
        ++upper;
    }

    std::size_t k = (n + biggest - 1) / biggest;
    for (; k < upper; ++k)
        if (cover_possible(lines.masks, all, k)) break;
    return k;
}

bool is_facher(const PointSet& S) { return S.size() >= 3 && max_collinear(S) == S.size() - 1; }

bool is_rails(const PointSet& S) {
    if (S.size() < 4 || is_facher(S)) return false;
    LineSet lines = distinct_lines(S);
    const std::size_t n = S.size();
    Mask all;
    for (std::size_t i = 0; i < n; ++i) all.set(i);
    for (std::size_t li = 0; li < lines.masks.size(); ++li) {
        Mask rest = all.and_not(lines.masks[li]);
        const std::size_t r = rest.count();
        if (r < 2 || r > n - 2) continue;
        // Collect the leftover points; they must sit on one line parallel to
        // line li.
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (rest.test(i)) idx.push_back(i);
        bool on_one_line = true;
        for (std::size_t t = 2; t < idx.size() && on_one_line; ++t)
            if (!collinear(S[idx[0]], S[idx[1]], S[idx[t]])) on_one_line = false;
        if (!on_one_line) continue;
        LineKey other = line_through(S[idx[0]], S[idx[1]]);
        const auto& [a1, b1] = lines.directions[li];
        if (a1 * other.b == other.a * b1) return true;
    }
    return false;
}

bool is_circular(const PointSet& S) {
    const std::size_t n = S.size();
    if (n < 3) return false;
    std::size_t wk = 0;
    for (std::size_t k = 2; k < n; ++k)
        if (!collinear(S[0], S[1], S[k])) {
            wk = k;
            break;
        }
    if (wk == 0) return false;  // everything collinear
    for (std::size_t d = 2; d < n; ++d) {
        if (d == wk) continue;
        if (!concyclic(S[0], S[1], S[wk], S[d], S.lattice())) return false;
    }
    return true;
}

bool semi_general_position(const PointSet& S) { return max_collinear(S) <= 2; }

bool general_position(const PointSet& S) {
    if (!semi_general_position(S)) return false;
    const std::size_t n = S.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d)
                    if (concyclic(S[a], S[b], S[c], S[d], S.lattice())) return false;
    return true;
}

std::vector<SymmetryAxis> symmetry_axes(const PointSet& S) {
    std::vector<SymmetryAxis> axes;
    if (S.size() == 0) return axes;
    const auto& pts = S.points();

    auto reduced = [](Integer num, Integer den) {
        Integer g = gcd(abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return std::pair<Integer, Integer>(num, den);
    };

    // Horizontal axis: reflection y -> t - y with t = min_y + max_y.
    {
        Integer min_y = pts[0].y, max_y = pts[0].y;
        for (const auto& pt : pts) {
            min_y = std::min(min_y, pt.y);
            max_y = std::max(max_y, pt.y);
        }
        Integer t = min_y + max_y;
        std::vector<LatticePoint> reflected;
        reflected.reserve(pts.size());
        for (const auto& pt : pts) reflected.push_back({pt.x, t - pt.y});
        std::sort(reflected.begin(), reflected.end());
        if (reflected == pts) {
            auto [num, den] = reduced(t, 2);
            axes.push_back({SymmetryAxis::Orientation::horizontal, num, den});
        }
    }
    // Vertical axis: reflection x -> s - x with s = min_x + max_x.
    {
        Integer min_x = pts[0].x, max_x = pts[0].x;
        for (const auto& pt : pts) {
            min_x = std::min(min_x, pt.x);
            max_x = std::max(max_x, pt.x);
        }
        Integer s = min_x + max_x;
        std::vector<LatticePoint> reflected;
        reflected.reserve(pts.size());
        for (const auto& pt : pts) reflected.push_back({s - pt.x, pt.y});
        std::sort(reflected.begin(), reflected.end());
        if (reflected == pts) {
            auto [num, den] = reduced(s, 2);
            axes.push_back({SymmetryAxis::Orientation::vertical, num, den});
        }
    }
    return axes;
}

ClassificationReport classify(const PointSet& S) {
    VerifyReport v = verify(S);
    if (!v.is_valid_pips())
        throw Error("classification requires a verified integral non-collinear set");
    ClassificationReport report;
    report.cardinality = S.size();
    report.diameter = diameter(S);
    report.characteristic = ips::characteristic(S);
    report.max_collinear = max_collinear(S);
    report.lines_cover = lines_cover(S);
    report.is_facher = is_facher(S);
    report.is_rails = is_rails(S);
    report.is_circular = is_circular(S);
    report.semi_general = semi_general_position(S);
    report.general = report.semi_general && general_position(S);
    report.symmetry_axes = symmetry_axes(S);
    return report;
}

}  // namespace ips
