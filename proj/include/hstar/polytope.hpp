#pragma once

#include "hstar/exactla.hpp"
#include "hstar/ints.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hstar::poly {

/// Convex polytope given by its integer vertex list. The list is expected to
/// be exactly the vertex set; `require_vertex_minimal` checks that where the
/// construction does not already guarantee it.
class LatticePolytope {
  public:
    LatticePolytope(std::size_t ambient_dim, std::vector<IntVec> vertices,
                    std::optional<std::string> name = std::nullopt);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<IntVec>& vertices() const { return vertices_; }
    const IntVec& vertex(std::size_t i) const { return vertices_[i]; }
    const std::optional<std::string>& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

  private:
    std::size_t ambient_dim_;
    std::vector<IntVec> vertices_;
    std::optional<std::string> name_;
};

/// Full-dimensional integral simplex: ambient_dim + 1 affinely independent
/// vertices v0, ..., vd.
class Simplex {
  public:
    explicit Simplex(LatticePolytope base);
    Simplex(std::size_t dim, std::vector<IntVec> vertices,
            std::optional<std::string> name = std::nullopt)
        : Simplex(LatticePolytope(dim, std::move(vertices), std::move(name))) {}

    const LatticePolytope& base() const { return base_; }
    std::size_t dim() const { return base_.ambient_dim(); }

    /// (d+1) x (d+1) matrix whose rows are (v_j, 1).
    exactla::IntMatrix homogeneous_rows() const;

  private:
    LatticePolytope base_;
};

/// Facet of a simplicial polytope: a.x = b on the facet, a.x <= b inside,
/// normal primitive and outward.
struct FacetDescription {
    std::vector<std::size_t> vertex_indices; // sorted
    IntVec normal;
    Int offset;
};

/// Affine dimension: rank of the vertex-difference matrix.
std::size_t dimension(const LatticePolytope& p);

/// Brute-force facet enumeration for simplicial polytopes (vertex count
/// guard <= 20). Throws Simpliciality if some supporting hyperplane carries
/// more than `dim` vertices, Budget over the guard, Domain if not
/// full-dimensional.
std::vector<FacetDescription> facet_enumeration(const LatticePolytope& p);

/// True when every listed point is a genuine vertex (Caratheodory check with
/// a simplex shortcut). Throws Budget when the check would be too large.
bool vertex_minimal(const LatticePolytope& p);
void require_vertex_minimal(const LatticePolytope& p);

/// Barycentric coefficients: the unique r with sum r_j (v_j, 1) = (point, height).
RatVec barycentric(const Simplex& s, const IntVec& point, const Int& height);

/// Exact lattice-point counting in dilations nP, closed or interior.
///
/// Construction precomputes the facet system and, per coordinate level, the
/// facet system of the projection onto the leading coordinates (Fourier-
/// Motzkin, filtered to genuine shadow facets). Projections commute with
/// dilation, so one cascade serves every n; enumeration recurses over
/// coordinates with exact interval bounds at each level.
class LatticeCounter {
  public:
    explicit LatticeCounter(const LatticePolytope& p, unsigned threads = 0);

    Int count(const Int& n, bool interior_only = false) const;
    bool interior_nonempty(const Int& n) const;
    const std::vector<FacetDescription>& facets() const { return facets_; }

  private:
    struct Constraint {
        IntVec a; // over x_1..x_level
        Int b;    // a.x <= n*b on the level's shadow
    };

    Int count_closed(const Int& n) const;
    Int count_interior(const Int& n) const;
    bool int64_safe(const Int& n) const;

    std::size_t dim_;
    unsigned threads_;
    std::vector<FacetDescription> facets_;
    std::vector<std::vector<Constraint>> levels_; // levels_[k-1]: system over x_1..x_k
    IntVec box_lo_, box_hi_;                      // vertex bounding box of P
};

/// Convenience wrapper; builds a counter per call.
Int count_lattice_points(const LatticePolytope& p, const Int& n,
                         bool interior_only = false);

/// Thread-count override: HSTAR_THREADS environment variable (0/unset = serial).
unsigned configured_threads();

} // namespace hstar::poly
