#pragma once

#include <optional>
#include <vector>

#include "ips/exactnum.hpp"

namespace ips {

// The scale pair of the representation sqrt(p)/q * {(x1,y1), ...}: a lattice
// point (x, y) denotes the plane point (x/q, y*sqrt(p)/q).
struct Lattice {
    Lattice(Integer radicand, Integer denominator);

    Integer p;  // squarefree positive radicand
    Integer q;  // positive denominator

    bool operator==(const Lattice&) const = default;
};

struct LatticePoint {
    Integer x;
    Integer y;

    bool operator==(const LatticePoint&) const = default;
};

// Lexicographic by (x, y); the canonical point order everywhere.
inline bool operator<(const LatticePoint& a, const LatticePoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// An immutable, canonically ordered set of distinct lattice points.
class PointSet {
  public:
    // Rejects duplicate points (DuplicatePointError names the colliding input
    // indices) and stores the points sorted.
    PointSet(Lattice lattice, std::vector<LatticePoint> points);

    // Accepts a non-squarefree radicand by absorbing its square part into the
    // ordinates. *absorbed reports whether that happened.
    static PointSet absorbing_radicand(const Integer& radicand, const Integer& denominator,
                                       std::vector<LatticePoint> points, bool* absorbed = nullptr);

    const Lattice& lattice() const { return lattice_; }
    const std::vector<LatticePoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const LatticePoint& operator[](std::size_t i) const { return points_[i]; }

    bool contains(const LatticePoint& pt) const;

    bool operator==(const PointSet&) const = default;

  private:
    Lattice lattice_;
    std::vector<LatticePoint> points_;
};

// N = (a.x - b.x)^2 + p * (a.y - b.y)^2; the plane distance is sqrt(N)/q.
Integer squared_numerator(const LatticePoint& a, const LatticePoint& b, const Lattice& L);

// True iff N is a perfect square whose root q divides.
bool is_integral_pair(const LatticePoint& a, const LatticePoint& b, const Lattice& L);

struct PairViolation {
    std::size_t first_index;
    std::size_t second_index;
    Integer numerator;   // the offending squared numerator N
    Integer squarefree;  // squarefree part of N (the sqrt(k) witness)
};

struct VerifyReport {
    std::size_t total_pairs = 0;
    std::vector<PairViolation> violations;
    bool is_integral = false;     // <=> violations empty
    bool is_noncollinear = false; // some non-collinear triple exists
    bool is_valid_pips() const { return is_integral && is_noncollinear && total_pairs >= 3; }
};

// Checks all C(n,2) pairs. Violations are data, not errors.
VerifyReport verify(const PointSet& S);

// Exact plane distance between points i and j; throws NonIntegralSetError if
// the pair is not integral.
Integer exact_distance(const PointSet& S, std::size_t i, std::size_t j);

// Largest pairwise distance, exact. Throws NonIntegralSetError.
Integer diameter(const PointSet& S);

bool has_noncollinear_triple(const PointSet& S);

// Minimal distance-preserving representation: square factors of p absorbed
// into ordinates, p reset to 1 when every ordinate is zero, and the joint
// gcd of all coordinates and q divided out. Idempotent; every pairwise plane
// distance is unchanged.
PointSet normalize(const PointSet& S);

PointSet dilate(const PointSet& S, const Integer& k);  // k >= 1
PointSet translate(const PointSet& S, const Integer& dx, const Integer& dy);
PointSet reflect_x(const PointSet& S);  // reflection in the x axis (negates y)
PointSet reflect_y(const PointSet& S);  // reflection in the y axis (negates x)

struct RotationOutcome {
    std::optional<PointSet> rotated;
    Integer obstruction_radicand;  // the p != 1 that blocks rotation, else 1
    bool ok() const { return rotated.has_value(); }
};

// Quarter turn (x, y) -> (-y, x) in the plane. Possible on a sqrt(p)/q
// lattice iff p == 1 after normalization; otherwise the radicand is the
// obstruction witness.
RotationOutcome rotate90(const PointSet& S);

}  // namespace ips
