#pragma once

#include "ips/lattice.hpp"

namespace ips {

// (a+b+c)(-a+b+c)(a-b+c)(a+b-c) for integer side lengths: sixteen times the
// squared triangle area. Zero iff degenerate, negative iff the sides violate
// the triangle inequality.
Integer heron_16A2(const Integer& a, const Integer& b, const Integer& c);

struct TriangleAreaWitness {
    std::size_t i, j, k;
    Integer determinant;      // D = (xj-xi)(yk-yi) - (xk-xi)(yj-yi)
    Integer sixteen_area_sq;  // from the side lengths; equals 4*p*D^2 / q^4
};

// Both area routes for one triangle; throws NonIntegralSetError if a side is
// not integral.
TriangleAreaWitness triangle_witness(const PointSet& S, std::size_t i, std::size_t j,
                                     std::size_t k);

struct CharacteristicOptions {
    bool full_scan = false;          // check every triangle regardless of size
    std::size_t full_scan_below = 13;  // cardinality bound for automatic full scans
    std::size_t sample_count = 200;  // extra deterministically sampled triangles
};

// The least positive integer c such that every triangle area in S is a
// rational multiple of sqrt(c): the squarefree part of 16*area^2 of any
// non-degenerate triangle. Agreement across triangles is enforced through the
// exact identity heron * q^4 == 4 * p * D^2 on the scanned triangles.
// Throws CollinearSetError when no triangle exists.
Integer characteristic(const PointSet& S, const CharacteristicOptions& options = {});

}  // namespace ips
