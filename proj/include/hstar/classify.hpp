#pragma once

#include "hstar/ehrhart.hpp"
#include "hstar/families.hpp"
#include "hstar/polytope.hpp"

#include <optional>
#include <vector>

namespace hstar::classify {

inline constexpr unsigned long long kDefaultSearchBudget = 10'000'000ULL;

/// Shifted-symmetric (0,1) delta-vector candidate with its gap profile
/// (run lengths of zeros around the ones, trailing gap included).
struct Candidate {
    IntVec delta;
    std::vector<long> gaps; // size = volume
    long volume;
    long dim;

    bool operator==(const Candidate& o) const { return delta == o.delta; }
};

/// All (0,1) sequences of length d+1 with delta_0 = 1 and sum = vol that are
/// shifted symmetric and satisfy the prefix/suffix inequalities.
/// Volumes above 5 are rejected as unsupported.
std::vector<Candidate> enumerate_candidates(long d, long vol);

/// Wrap a raw (0,1) sequence with delta_0 = 1 as a search target.
Candidate candidate_from_delta(IntVec delta);

enum class RealizationStatus {
    RealizedByFamily,
    RealizedBySearch,
    Unrealized,             // search exhausted the equivalence classes: a proof
    UnrealizedWithinBudget, // search stopped at the budget: no verdict
};

const char* realization_status_name(RealizationStatus s);

struct RealizationResult {
    Candidate candidate;
    RealizationStatus status;
    std::optional<poly::LatticePolytope> witness;
    std::optional<fam::FamilySpec> family; // set for RealizedByFamily
    unsigned long long examined = 0;       // simplices tested by the search
    bool searched = false;
};

/// Dispatch the gap profile to the realizing family, falling back to the
/// brute-force search; every witness is re-verified through the box engine
/// before being reported.
RealizationResult realize(const Candidate& c,
                          unsigned long long budget = kDefaultSearchBudget);

/// Brute-force oracle: sweep simplices conv{0, e_1, ..., e_{d-1}, w} with
/// w = (w_1, ..., w_{d-1}, vol), 0 <= w_i < vol. Every simplex of prime
/// normalized volume is lattice-equivalent to one of these, so for prime
/// volumes a completed sweep without a witness proves non-realizability.
RealizationResult search_realization(const Candidate& c,
                                     unsigned long long budget = kDefaultSearchBudget);

struct ClassificationReport {
    long d_max;
    long volume;
    std::vector<RealizationResult> entries; // ordered by (d, candidate)
    std::vector<std::size_t> unrealized;    // indices into entries
};

ClassificationReport classification_report(
    long d_max, long vol, unsigned long long budget = kDefaultSearchBudget);

} // namespace hstar::classify
