#pragma once

#include "hstar/polytope.hpp"

#include <vector>

namespace hstar::ehrhart {

/// Coefficient vector (delta_0, ..., delta_d) of the Ehrhart series
/// numerator. Validated on construction: delta_0 = 1, entries nonnegative,
/// delta_1 >= delta_d.
class DeltaVector {
  public:
    explicit DeltaVector(IntVec entries);

    const IntVec& entries() const { return entries_; }
    std::size_t dim() const { return entries_.size() - 1; }
    const Int& operator[](std::size_t i) const { return entries_[i]; }

    Int sum() const; // normalized volume
    /// Largest index with a nonzero entry (0 when only delta_0 is nonzero).
    std::size_t top_index() const;

    bool operator==(const DeltaVector& o) const { return entries_ == o.entries_; }

  private:
    IntVec entries_;
};

/// Integer point of the half-open fundamental box of a simplex, with its
/// degree and exact barycentric coefficients.
struct BoxPoint {
    IntVec point;    // spatial part, length d
    long degree;     // last homogeneous coordinate = sum of coefficients
    RatVec coeffs;   // r_0..r_d; in [0,1) for S, in (0,1] for S*
};

/// The set S: all lattice points sum r_j (v_j, 1) with 0 <= r_j < 1.
/// Exactly vol(S) points, enumerated through the Smith normal form of the
/// homogeneous vertex matrix; includes the origin at degree 0.
std::vector<BoxPoint> box_points(const poly::Simplex& s);

/// The dual set S*: coefficients in (0,1]; degrees satisfy
/// deg S* = { d+1-i : i over deg S } as multisets.
std::vector<BoxPoint> dual_box_points(const poly::Simplex& s);

/// delta_i = number of box points of degree i.
DeltaVector delta_from_box(const poly::Simplex& s);

/// delta_i = sum_{j<=i} (-1)^j binom(d+1, j) i(P, i-j), from exact dilation
/// counts; the independent engine for cross-checking delta_from_box.
DeltaVector delta_from_counts(const poly::LatticePolytope& p);

Int normalized_volume(const poly::Simplex& s);       // |det| of homogeneous rows
Int normalized_volume(const poly::LatticePolytope& p); // sum of delta entries

/// max{ i : delta_i != 0 } against d+1 - min{ n : interior of nP meets Z^d }.
struct DegreeIdentityReport {
    std::size_t top_index;
    long first_interior_dilation;
    bool holds;
};
DegreeIdentityReport degree_identity_report(const poly::Simplex& s);

} // namespace hstar::ehrhart
