#pragma once

#include "ips/lattice.hpp"

namespace ips {

// Desk-scale brute-force oracle. Guidance: cardinality <= 6, diameter <= 200.
struct EnumerationTask {
    std::size_t cardinality = 3;
    Integer max_diameter = 1;
    bool semi_general_only = false;  // keep only sets with no 3 collinear
    bool general_only = false;       // additionally no 4 concyclic
    std::uint64_t max_candidate_pairs = 10'000'000;  // exact-check budget
    unsigned workers = 0;  // 0: IPS_WORKERS env or hardware concurrency
};

// All planar integral point sets of the given cardinality with diameter at
// most max_diameter, normalized and deduplicated up to translation, axis
// reflections and relabeling. Output is deterministic and independent of the
// worker count: blocks are keyed by diameter, canonically sorted inside each
// block.
std::vector<PointSet> enumerate_sets(const EnumerationTask& task);

struct MinDiameterResult {
    bool found = false;
    Integer diameter;                // meaningful when found
    std::vector<PointSet> witnesses; // every set at that diameter
};

// Smallest diameter <= cap admitting a set of the given cardinality.
MinDiameterResult min_diameter(std::size_t cardinality, const Integer& diameter_cap,
                               unsigned workers = 0);

}  // namespace ips
