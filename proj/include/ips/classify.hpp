#pragma once

#include "ips/lattice.hpp"

namespace ips {

// Exact collinearity through the 2x2 difference determinant; the sqrt(p)
// ordinate factor cancels, so no lattice is needed.
bool collinear(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

// Exact concyclicity via the 4x4 determinant with rows (x^2 + p*y^2, x, y, 1).
// Returns false when a, b, c are collinear: a line is not a circle here.
bool concyclic(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c,
               const LatticePoint& d, const Lattice& L);

// Size of the largest collinear subset.
std::size_t max_collinear(const PointSet& S);

// Minimum number of straight lines whose union contains S. Exact
// branch-and-bound seeded with a greedy peeling upper bound.
std::size_t lines_cover(const PointSet& S);

bool is_facher(const PointSet& S);   // n-1 points on one line
bool is_rails(const PointSet& S);    // non-facher, on two parallel lines
bool is_circular(const PointSet& S); // all points on one circle
bool semi_general_position(const PointSet& S);  // no 3 collinear
bool general_position(const PointSet& S);       // additionally no 4 concyclic

struct SymmetryAxis {
    enum class Orientation { horizontal, vertical };
    Orientation orientation;
    // Axis position in lattice units as the exact rational num/den:
    // a vertical axis sits at plane x = (num/den)/q, a horizontal one at
    // plane y = (num/den)*sqrt(p)/q.
    Integer position_num;
    Integer position_den;

    bool operator==(const SymmetryAxis&) const = default;
};

// All axis-aligned reflection axes fixing S as a set. A finite set admits at
// most one vertical and one horizontal axis, both through the coordinate
// midrange.
std::vector<SymmetryAxis> symmetry_axes(const PointSet& S);

struct ClassificationReport {
    std::size_t cardinality = 0;
    Integer diameter;
    Integer characteristic;
    std::size_t max_collinear = 0;
    std::size_t lines_cover = 0;
    bool is_facher = false;
    bool is_rails = false;
    bool is_circular = false;
    bool semi_general = false;
    bool general = false;
    std::vector<SymmetryAxis> symmetry_axes;
};

// Full structural report; requires a verified integral non-collinear set.
ClassificationReport classify(const PointSet& S);

}  // namespace ips
