#pragma once

#include "hstar/deltaprops.hpp"
#include "hstar/ehrhart.hpp"
#include "hstar/polytope.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hstar::fam {

enum class FamilyId {
    ShiftedStandard,
    AugmentedStandard,
    Circulant,
    SimplicialLb,
    Vol4,
    Vol5a,
    Vol5b,
    Vol5c,
};

const char* family_id_name(FamilyId id);

/// Family instance descriptor: parameters plus the predicted invariant the
/// construction is supposed to realize. The test harness, not the
/// constructor, decides pass/fail against the prediction.
struct FamilySpec {
    FamilyId id;
    std::vector<std::pair<std::string, long>> params;
    std::optional<ehrhart::DeltaVector> predicted_delta;
    std::optional<props::HVector> predicted_h;
    std::string note; // provenance of the prediction

    std::string display_name() const;
};

struct FamilyInstance {
    poly::LatticePolytope polytope;
    FamilySpec spec;

    poly::Simplex simplex() const { return poly::Simplex(polytope); }
    bool is_simplex() const {
        return polytope.vertex_count() == polytope.ambient_dim() + 1;
    }
};

/// conv{(-e,...,-e), e_1, ..., e_d}; delta = (1,e,...,e), volume ed+1.
FamilyInstance shifted_standard(long d, long e);

/// conv{(e,...,e), e_1, ..., e_d}, d >= 3, e >= 1;
/// delta = (1, e-1, e, ..., e, e-1), volume ed-1.
FamilyInstance augmented_standard(long d, long e);

/// conv{0, v_1, ..., v_d} with v_i the cyclic sum of m consecutive unit
/// vectors; requires gcd(m, d) = 1. Volume m, delta by the residue rule.
FamilyInstance circulant(long d, long m);

/// Closed-form circulant delta: delta_i = 1 iff (i*m mod d) in {1,...,m-1}.
ehrhart::DeltaVector residue_delta(long d, long m);

/// Simplicial polytope whose facets all have normalized volume 1 and whose
/// boundary-complex h-vector is (1, h1, ..., h1, 1).
FamilyInstance simplicial_lower_bound(long d, long h1);

/// Volume-4 simplices realizing the gap pattern
/// (1, 0^{k+l}, 1, 0^k, 1, 0^k, 1, 0^{k+l}).
FamilyInstance volume4_family(long k, long l);

enum class Vol5Variant { A, B, C };

/// Volume-5 simplices realizing the three gap patterns with gaps
/// (k+l,k,k,k,k+l), (k+l,k,k+l,k,k+l), (k+l,k+l,k,k+l,k+l).
FamilyInstance volume5_family(long k, long l, Vol5Variant variant);

} // namespace hstar::fam
