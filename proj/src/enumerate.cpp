#include "ips/enumerate.hpp"

#include "ips/classify.hpp"
#include "ips/workers.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>

namespace ips {

namespace {

using std::int64_t;

constexpr int64_t kMaxBaseLength = 10'000;  // keeps every intermediate in int64

struct Candidate {
    int64_t x;  // lattice abscissa (denominator 2d)
    int64_t m;  // lattice ordinate; 0 means on the base line
    bool operator<(const Candidate& o) const { return x != o.x ? x < o.x : m < o.m; }
};

bool pointset_less(const PointSet& a, const PointSet& b) {
    if (a.lattice().p != b.lattice().p) return a.lattice().p < b.lattice().p;
    if (a.lattice().q != b.lattice().q) return a.lattice().q < b.lattice().q;
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return a[i] < b[i];
    }
    return false;
}

// Orbit-minimal representative under translations, the two axis reflections
// and relabeling. Rotations are deliberately not part of the group.
PointSet canonical_congruence_form(const PointSet& S) {
    std::optional<PointSet> best;
    for (int rx = 0; rx < 2; ++rx)
        for (int ry = 0; ry < 2; ++ry) {
            PointSet v = S;
            if (rx) v = reflect_x(v);
            if (ry) v = reflect_y(v);
            Integer min_x = v[0].x, min_y = v[0].y;
            for (const LatticePoint& pt : v.points()) {
                min_x = std::min(min_x, pt.x);
                min_y = std::min(min_y, pt.y);
            }
            PointSet c = normalize(translate(v, -min_x, -min_y));
            if (!best || pointset_less(c, *best)) best = std::move(c);
        }
    return *best;
}

// Squarefree split of y2 = (2*d*r0 - x)(2*d*r0 + x) without factoring the
// product itself.
std::pair<int64_t, int64_t> squarefree_split(int64_t lo, int64_t hi) {
    Factorization f = factorization_product(factorize(lo), factorize(hi));
    SquarefreeDecomposition d = squarefree_part(f);
    return {static_cast<int64_t>(d.squarefree), static_cast<int64_t>(d.root)};
}

struct ClassPool {
    std::vector<Candidate> off;   // candidates off the base line, sorted
    std::vector<int64_t> axis;    // abscissas of on-line candidates (shared)
};

// All sets with diameter exactly d, canonical and deduplicated.
std::vector<PointSet> enumerate_block(int64_t d, const EnumerationTask& task,
                                      std::atomic<std::uint64_t>& pair_budget) {
    const std::size_t need = task.cardinality - 2;
    const int64_t q = 2 * d;
    const Integer base_far = Integer(2) * d * d;  // lattice x of the point (d, 0)

    // Interior axis candidates: integer abscissas strictly between the base
    // endpoints; distances to both endpoints are automatically integral and
    // below d.
    std::vector<int64_t> axis;
    for (int64_t x0 = 1; x0 < d; ++x0) axis.push_back(q * x0);

    // Off-line candidates, grouped by the squarefree class of the squared
    // ordinate: distances across classes are irrational, so classes never mix.
    std::map<int64_t, std::vector<Candidate>> classes;
    for (int64_t r0 = 1; r0 <= d; ++r0)
        for (int64_t r1 = 1; r1 <= d; ++r1) {
            int64_t x = r0 * r0 - r1 * r1 + d * d;
            int64_t lo = 2 * d * r0 - x;
            int64_t hi = 2 * d * r0 + x;
            if (lo <= 0) continue;  // y^2 <= 0: degenerate or outside the lens
            auto [k, m] = squarefree_split(lo, hi);
            classes[k].push_back({x, m});
            classes[k].push_back({x, -m});
        }

    std::vector<PointSet> out;
    std::vector<Candidate> pool;
    std::vector<std::vector<bool>> adj;
    for (auto& [k, off] : classes) {
        std::sort(off.begin(), off.end());
        const std::size_t F = off.size();
        pool = off;
        for (int64_t x : axis) pool.push_back({x, 0});
        const std::size_t P = pool.size();
        if (P < need) continue;

        const Lattice lattice{Integer(k), Integer(q)};
        const Integer cap = Integer(4) * d * d * d * d;  // (d*q)^2
        auto compatible_exact = [&](const Candidate& a, const Candidate& b) {
            Integer dx = Integer(a.x) - b.x;
            Integer dy = Integer(a.m) - b.m;
            Integer N = dx * dx + lattice.p * dy * dy;
            if (N > cap) return false;
            IsqrtResult r = isqrt(N);
            return r.exact && r.root % q == 0;
        };

        if (need >= 2) {
            // Only pairs touching an off-line candidate need an exact check;
            // two on-line candidates are always compatible.
            std::uint64_t cost = (std::uint64_t)F * (F - 1) / 2 + (std::uint64_t)F * axis.size();
            if (pair_budget.fetch_add(cost) + cost > task.max_candidate_pairs)
                throw ResourceLimitError(
                    "enumeration candidate-pair budget exceeded; lower the diameter bound");
            adj.assign(P, std::vector<bool>(P, true));
            for (std::size_t i = 0; i < F; ++i)
                for (std::size_t j = i + 1; j < P; ++j)
                    adj[i][j] = adj[j][i] = compatible_exact(pool[i], pool[j]);
        }

        // Ordered clique search; the first pick is forced off the base line,
        // which both guarantees non-collinearity and avoids walking the
        // all-axis cliques.
        std::vector<std::size_t> chosen;
        auto emit = [&] {
            std::vector<LatticePoint> pts;
            pts.reserve(task.cardinality);
            pts.push_back({Integer(0), Integer(0)});
            pts.push_back({base_far, Integer(0)});
            for (std::size_t idx : chosen) pts.push_back({Integer(pool[idx].x), Integer(pool[idx].m)});
            PointSet set(lattice, std::move(pts));
            if (task.semi_general_only && !semi_general_position(set)) return;
            if (task.general_only && !general_position(set)) return;
            out.push_back(canonical_congruence_form(set));
        };
        auto extend = [&](auto&& self, std::size_t start) -> void {
            if (chosen.size() == need) {
                emit();
                return;
            }
            for (std::size_t j = start; j + (need - chosen.size()) <= P; ++j) {
                bool ok = true;
                for (std::size_t idx : chosen) {
                    if (idx >= F && j >= F) continue;  // axis-axis
                    if (!adj[idx][j]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                chosen.push_back(j);
                self(self, j + 1);
                chosen.pop_back();
            }
        };
        for (std::size_t first = 0; first < F; ++first) {
            chosen.assign(1, first);
            extend(extend, first + 1);
        }
    }

    std::sort(out.begin(), out.end(), pointset_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void validate(const EnumerationTask& task) {
    if (task.cardinality < 3) throw Error("enumeration cardinality must be at least 3");
    if (task.max_diameter < 1) throw Error("enumeration diameter bound must be at least 1");
    if (task.max_diameter > kMaxBaseLength)
        throw ResourceLimitError("enumeration diameter bound exceeds desk scale (10^4)");
}

}  // namespace

std::vector<PointSet> enumerate_sets(const EnumerationTask& task) {
    validate(task);
    const int64_t D = static_cast<int64_t>(task.max_diameter);
    std::atomic<std::uint64_t> pair_budget{0};
    std::vector<std::vector<PointSet>> blocks(D);
    parallel_for_index(D, task.workers, [&](std::size_t i) {
        blocks[i] = enumerate_block(static_cast<int64_t>(i) + 1, task, pair_budget);
    });
    std::vector<PointSet> out;
    for (auto& block : blocks)
        for (auto& s : block) out.push_back(std::move(s));
    return out;
}

MinDiameterResult min_diameter(std::size_t cardinality, const Integer& diameter_cap,
                               unsigned workers) {
    EnumerationTask task;
    task.cardinality = cardinality;
    task.workers = workers;
    if (diameter_cap < 1) return {};
    if (diameter_cap > kMaxBaseLength)
        throw ResourceLimitError("diameter cap exceeds desk scale (10^4)");
    std::atomic<std::uint64_t> pair_budget{0};
    for (int64_t d = 1; d <= static_cast<int64_t>(diameter_cap); ++d) {
        task.max_diameter = d;
        std::vector<PointSet> block = enumerate_block(d, task, pair_budget);
        if (!block.empty()) return {true, Integer(d), std::move(block)};
    }
    return {};
}

}  // namespace ips
