#include "ips/construct.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ips {

namespace {

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

PointSet rescale_to_denominator(const PointSet& S, const Integer& q) {
    const Integer factor = q / S.lattice().q;
    if (factor == 1) return S;
    std::vector<LatticePoint> pts = S.points();
    for (LatticePoint& pt : pts) {
        pt.x *= factor;
        pt.y *= factor;
    }
    return PointSet(Lattice(S.lattice().p, q), std::move(pts));
}

}  // namespace

MergeOutcome merge(const PointSet& A, const PointSet& B) {
    PointSet na = normalize(A);
    PointSet nb = normalize(B);
    if (na.lattice().p != nb.lattice().p) {
        std::ostringstream os;
        os << "cannot merge: radicand " << na.lattice().p << " vs " << nb.lattice().p
           << " after normalization (incompatible characteristics)";
        throw LatticeMismatchError(os.str());
    }
    const Integer q = lcm(na.lattice().q, nb.lattice().q);
    na = rescale_to_denominator(na, q);
    nb = rescale_to_denominator(nb, q);

    MergeOutcome out;
    for (const LatticePoint& a : na.points())
        for (const LatticePoint& b : nb.points()) {
            if (a == b) continue;
            Integer N = squared_numerator(a, b, na.lattice());
            IsqrtResult r = isqrt(N);
            if (!r.exact || r.root % q != 0)
                out.obstructions.push_back({a, b, N, squarefree_part(N).squarefree});
        }
    out.success = out.obstructions.empty();
    if (out.success) {
        std::vector<LatticePoint> pts = na.points();
        for (const LatticePoint& b : nb.points())
            if (!na.contains(b)) pts.push_back(b);
        out.merged = PointSet(na.lattice(), std::move(pts));
    }
    return out;
}

std::vector<AxisCandidate> extend_on_axis(const PointSet& S, const std::optional<Integer>& bound) {
    const Lattice& L = S.lattice();
    std::vector<std::size_t> off_axis;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (S[i].y != 0) off_axis.push_back(i);
    if (off_axis.empty())
        throw CollinearSetError("extend_on_axis: every point already lies on the target line");

    // One anchor suffices: a candidate must be integral against it, and the
    // divisor pairs of N = p*b^2 enumerate all such abscissas. Pick the
    // anchor with the fewest divisors; if any anchor has N == 2 (mod 4) no
    // candidate can exist at all, since s^2 - d^2 is never 2 mod 4.
    const Factorization p_fact = factorize(L.p);
    std::size_t anchor = off_axis.front();
    Factorization anchor_fact;
    std::uint64_t anchor_divisors = 0;
    for (std::size_t idx : off_axis) {
        Factorization f =
            factorization_product(p_fact, factorization_power(factorize(abs(S[idx].y)), 2));
        Integer N = factorization_value(f);
        if (N % 4 == 2) return {};
        std::uint64_t d = divisor_count(f);
        if (anchor_divisors == 0 || d < anchor_divisors) {
            anchor_divisors = d;
            anchor = idx;
            anchor_fact = std::move(f);
        }
    }

    const Integer a = S[anchor].x;
    std::vector<Integer> abscissas;
    for (const DivisorPair& dp : divisor_pairs(anchor_fact)) {
        if ((dp.u & 1) != (dp.v & 1)) continue;
        Integer s = (dp.u + dp.v) / 2;
        if (s % L.q != 0) continue;  // distance to the anchor must be integral
        Integer half = (dp.v - dp.u) / 2;
        abscissas.push_back(a + half);
        abscissas.push_back(a - half);
    }
    std::sort(abscissas.begin(), abscissas.end());
    abscissas.erase(std::unique(abscissas.begin(), abscissas.end()), abscissas.end());

    std::vector<AxisCandidate> out;
    for (const Integer& t : abscissas) {
        if (bound && abs(t) > *bound) continue;
        const LatticePoint candidate{t, Integer(0)};
        bool ok = true;
        for (std::size_t i = 0; i < S.size() && ok; ++i) {
            if (S[i] == candidate) continue;
            ok = is_integral_pair(candidate, S[i], L);
        }
        if (!ok) continue;
        AxisCandidate c;
        c.t = t;
        c.already_present = S.contains(candidate);
        for (std::size_t idx : off_axis) {
            Integer N = squared_numerator(candidate, S[idx], L);
            c.distances.push_back(isqrt(N).root / L.q);
        }
        out.push_back(std::move(c));
    }
    return out;
}

MergeOutcome reflect_extend(const PointSet& S) { return merge(S, reflect_x(S)); }

DilationPair align_for_merge(const PointSet& A, const PointSet& B,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairing) {
    if (pairing.empty()) throw Error("align_for_merge: empty pairing");
    // dilate(A, ka) == dilate(B, kb) on a pair means ka/kb equals the
    // componentwise plane ratio of B over A. Collect that ratio from every
    // nonzero component; all must agree.
    Integer num = 0, den = 0;  // ka : kb, unset while 0/0
    auto feed = [&](const Integer& coord_a, const Integer& coord_b) {
        if (coord_a == 0 && coord_b == 0) return;
        if (coord_a == 0 || coord_b == 0)
            throw Error("align_for_merge: zero paired against nonzero coordinate");
        Integer n = coord_b, d = coord_a;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n < 0) throw Error("align_for_merge: paired coordinates have opposite signs");
        Integer g = gcd(n, d);
        n /= g;
        d /= g;
        if (num == 0 && den == 0) {
            num = n;
            den = d;
        } else if (num != n || den != d) {
            throw Error("align_for_merge: paired points are not in a single rational ratio");
        }
    };
    const Integer& qa = A.lattice().q;
    const Integer& qb = B.lattice().q;
    for (const auto& [ia, ib] : pairing) {
        if (ia >= A.size() || ib >= B.size()) throw Error("align_for_merge: pairing index out of range");
        // Compare plane coordinates: x/q per set, so cross-multiply by the
        // denominators.
        feed(A[ia].x * qb, B[ib].x * qa);
        feed(A[ia].y * qb, B[ib].y * qa);
    }
    if (num == 0 && den == 0) return {Integer(1), Integer(1)};
    return {num, den};
}

ShrinkResult shrink(const PointSet& S) {
    Integer g = 0;
    for (const LatticePoint& pt : S.points()) {
        g = gcd(g, pt.x);
        g = gcd(g, pt.y);
        if (g == 1) break;
    }
    if (g <= 1) return {S, Integer(1)};
    std::vector<LatticePoint> pts = S.points();
    for (LatticePoint& pt : pts) {
        pt.x /= g;
        pt.y /= g;
    }
    return {PointSet(S.lattice(), std::move(pts)), g};
}

}  // namespace ips
