#pragma once

#include "hstar/ehrhart.hpp"
#include "hstar/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hstar::props {

// The checkers take raw nonnegative integer sequences so tests can exercise
// the false branches; genuine DeltaVector values never violate the two
// inequality systems.

/// delta_{d-i} == delta_{i+1} for 0 <= i <= floor((d-1)/2).
bool is_shifted_symmetric(const IntVec& delta);

/// delta_i == delta_{s-i} for 0 <= i <= floor(s/2), s the top nonzero index.
bool is_symmetric(const IntVec& delta);

/// Prefix sums bounded by suffix sums at the top index s:
/// delta_0 + ... + delta_i <= delta_s + ... + delta_{s-i}, 0 <= i <= floor(s/2).
bool stanley_holds(const IntVec& delta);

/// delta_d + ... + delta_{d-i} <= delta_1 + ... + delta_{i+1},
/// 0 <= i <= floor((d-1)/2).
bool hibi_holds(const IntVec& delta);

inline bool is_shifted_symmetric(const ehrhart::DeltaVector& d) {
    return is_shifted_symmetric(d.entries());
}
inline bool is_symmetric(const ehrhart::DeltaVector& d) {
    return is_symmetric(d.entries());
}
inline bool stanley_holds(const ehrhart::DeltaVector& d) {
    return stanley_holds(d.entries());
}
inline bool hibi_holds(const ehrhart::DeltaVector& d) {
    return hibi_holds(d.entries());
}

/// Normalized volume of each facet of a simplex, indexed by omitted vertex:
/// the gcd of the maximal minors of the facet's edge matrix.
std::vector<Int> facet_volumes(const poly::Simplex& s);

/// The three equivalent conditions for a simplex: (i) shifted-symmetric
/// delta-vector, (ii) all facets unimodular, (iii) every nonzero box point
/// strictly inside the box (no zero coefficient). Flags must agree on every
/// valid simplex; witnesses explain any false flag.
struct ShiftedSymmetryReport {
    ehrhart::DeltaVector delta;
    bool shifted_symmetric;
    bool all_facets_unimodular;
    bool box_strictly_interior;
    // facet with volume > 1: (omitted vertex index, volume)
    std::optional<std::pair<std::size_t, Int>> facet_witness;
    // box point with a zero coefficient: (point, coefficient index)
    std::optional<std::pair<ehrhart::BoxPoint, std::size_t>> box_witness;

    bool consistent() const {
        return shifted_symmetric == all_facets_unimodular &&
               all_facets_unimodular == box_strictly_interior;
    }
};
ShiftedSymmetryReport shifted_symmetry_report(const poly::Simplex& s);

/// Empirical check of the prime-volume criterion: prime normalized volume
/// plus the degree-gap condition min{i>0 : delta_i != 0} = d+1 - top index
/// force a shifted-symmetric delta-vector.
enum class PrimeVolumeStatus { Inapplicable, Holds, Violation };
struct PrimeVolumeReport {
    PrimeVolumeStatus status;
    std::string reason;
    ehrhart::DeltaVector delta;
};
PrimeVolumeReport prime_volume_criterion(const poly::Simplex& s);

/// h-vector of the boundary complex of a simplicial polytope.
struct HVector {
    IntVec entries; // h_0..h_d

    bool operator==(const HVector& o) const { return entries == o.entries; }
};

struct HVectorReport {
    HVector h;
    IntVec f;             // f_0..f_{d-1} of the boundary complex
    bool lower_bound_met; // h_1 <= h_i for 1 <= i <= d-1
};
HVectorReport h_vector(const poly::LatticePolytope& p);

} // namespace hstar::props
