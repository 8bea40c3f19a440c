#include "ips/characteristic.hpp"

#include <array>
#include <sstream>

namespace ips {

namespace {

Integer coordinate_det(const PointSet& S, std::size_t i, std::size_t j, std::size_t k) {
    const LatticePoint& a = S[i];
    const LatticePoint& b = S[j];
    const LatticePoint& c = S[k];
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Cross-check one triangle: the side-length route must reproduce the
// coordinate route exactly.
void check_triangle(const PointSet& S, const Integer& q4, std::size_t i, std::size_t j,
                    std::size_t k) {
    Integer D = coordinate_det(S, i, j, k);
    if (D == 0) return;
    Integer a = exact_distance(S, i, j);
    Integer b = exact_distance(S, j, k);
    Integer c = exact_distance(S, i, k);
    Integer H = heron_16A2(a, b, c);
    if (H * q4 != 4 * S.lattice().p * D * D) {
        std::ostringstream os;
        os << "triangle (" << i << "," << j << "," << k
           << "): side-length area disagrees with coordinate area";
        throw Error(os.str());
    }
}

}  // namespace

Integer heron_16A2(const Integer& a, const Integer& b, const Integer& c) {
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
}

TriangleAreaWitness triangle_witness(const PointSet& S, std::size_t i, std::size_t j,
                                     std::size_t k) {
    Integer a = exact_distance(S, i, j);
    Integer b = exact_distance(S, j, k);
    Integer c = exact_distance(S, i, k);
    return {i, j, k, coordinate_det(S, i, j, k), heron_16A2(a, b, c)};
}

Integer characteristic(const PointSet& S, const CharacteristicOptions& options) {
    const PointSet N = normalize(S);
    const std::size_t n = N.size();

    // Witness triangle: the first non-degenerate one in index order.
    std::size_t wi = 0, wj = 0, wk = 0;
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
            for (std::size_t k = j + 1; k < n && !found; ++k)
                if (coordinate_det(N, i, j, k) != 0) {
                    wi = i, wj = j, wk = k;
                    found = true;
                }
    if (!found) throw CollinearSetError("characteristic undefined: all triples collinear");

    // Squarefree part of 16*area^2 = 4*p*D^2/q^4 of the witness triangle,
    // assembled factor-by-factor (never factoring the huge product itself).
    const Integer D = coordinate_det(N, wi, wj, wk);
    Factorization f = factorize(4);
    f = factorization_product(f, factorize(N.lattice().p));
    f = factorization_product(f, factorization_power(factorize(abs(D)), 2));
    f = factorization_product(f, factorization_power(factorize(N.lattice().q), 4));
    const Integer c = squarefree_part(f).squarefree;

    const Integer q4 = boost::multiprecision::pow(N.lattice().q, 4);
    if (options.full_scan || n < options.full_scan_below) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) check_triangle(N, q4, i, j, k);
    } else {
        // Every triangle on the base edge (0,1), plus a deterministic sample.
        for (std::size_t k = 2; k < n; ++k) check_triangle(N, q4, 0, 1, k);
        std::uint64_t state = 0x1975c0deull ^ (std::uint64_t)n;
        for (std::size_t t = 0; t < options.sample_count; ++t) {
            std::size_t i = splitmix64(state) % n;
            std::size_t j = splitmix64(state) % n;
            std::size_t k = splitmix64(state) % n;
            if (i == j || j == k || i == k) continue;
            check_triangle(N, q4, i, j, k);
        }
    }
    return c;
}

}  // namespace ips
