#pragma once

#include <optional>
#include <utility>

#include "ips/lattice.hpp"

namespace ips {

struct ObstructingPair {
    LatticePoint from_a;
    LatticePoint from_b;
    Integer numerator;   // squared numerator of the non-integral cross distance
    Integer squarefree;  // its squarefree part
};

struct MergeOutcome {
    bool success = false;
    std::optional<PointSet> merged;     // set when success
    std::vector<ObstructingPair> obstructions;
};

// Union of two sets on a shared lattice. Denominators are reconciled by
// rescaling to their lcm; a radicand mismatch after normalization throws
// LatticeMismatchError. Success iff every cross pair is integral; otherwise
// every obstructing pair is listed with its squarefree witness.
MergeOutcome merge(const PointSet& A, const PointSet& B);

struct AxisCandidate {
    Integer t;                       // lattice abscissa of the candidate (t, 0)
    std::vector<Integer> distances;  // exact plane distance to each off-axis point
    bool already_present = false;    // (t, 0) is already a member of S
};

// Every integer abscissa t such that (t, 0) is at integral distance to all of
// S, found by factoring N = p*b^2 of one off-axis anchor into same-parity
// divisor pairs. Emitted in increasing t order. Throws CollinearSetError when
// S has no off-axis point.
std::vector<AxisCandidate> extend_on_axis(const PointSet& S,
                                          const std::optional<Integer>& bound = std::nullopt);

// merge(S, reflect_x(S)): success means the x-axis symmetrization is integral.
MergeOutcome reflect_extend(const PointSet& S);

struct DilationPair {
    Integer k_a;
    Integer k_b;
};

// Smallest positive factors with dilate(A, k_a) and dilate(B, k_b) agreeing on
// every paired point. Throws when the paired coordinates admit no single
// positive rational ratio.
DilationPair align_for_merge(const PointSet& A, const PointSet& B,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairing);

struct ShrinkResult {
    PointSet reduced;
    Integer factor;  // gcd of all coordinates; 1 when already primitive
};

// Divides all coordinates by their gcd; inverse of dilate.
ShrinkResult shrink(const PointSet& S);

}  // namespace ips
