#pragma once

#include "toriclab/exact_linalg.hpp"

#include <vector>

namespace toric {

// Rational polyhedral cone as the positive hull of primitive rays. Cones
// built through make_cone carry a reduced generating set (extreme rays when
// pointed) in sorted order, so equal cones compare equal.
struct Cone {
    int ambient_rank = 0;
    std::vector<IntVec> rays;
    bool pointed = true;

    bool is_zero() const { return rays.empty(); }
    size_t dim() const;

    bool operator==(const Cone& o) const {
        return ambient_rank == o.ambient_rank && rays == o.rays;
    }
    bool operator<(const Cone& o) const { return rays < o.rays; }
};

// Canonicalizes a generating set: primitive rays, duplicates and redundant
// generators dropped, sorted. Lines are allowed (pointed flag records them).
Cone make_cone(int ambient_rank, std::vector<IntVec> generators);

bool cone_contains(const Cone& c, const IntVec& v);
bool cone_subset(const Cone& inner, const Cone& outer);
bool cone_relint_contains(const Cone& c, const IntVec& v);

// Convex dual {u : <u, v> >= 0 for all v in c}, as a generating ray set in
// the dual lattice (lines appear as opposite ray pairs). Rank <= 3.
Cone dual_cone(const Cone& c);

// All faces of a pointed cone, the cone itself included.
std::vector<Cone> faces_of(const Cone& c);

Cone intersect_cones(const Cone& a, const Cone& b);

// Finite generating set of the semigroup (dual cone) cap M: the integer
// points of the box spanned by the dual generators. Not minimal in general.
std::vector<IntVec> dual_semigroup_generators(const Cone& c);

struct HilbertBasis {
    std::vector<IntVec> elements;
};

// Minimal generating set of (dual cone) cap M for a full-dimensional
// pointed cone of rank <= 3.
HilbertBasis hilbert_basis(const Cone& c);

// Face-closed, pairwise-compatible collection of pointed cones.
struct Fan {
    int ambient_rank = 0;
    std::vector<Cone> cones; // sorted by (dim, rays)
    bool complete = false;

    std::vector<Cone> maximal_cones() const;
    bool has_cone(const Cone& c) const;
};

// Adds missing faces, verifies the pairwise face-intersection property and
// computes completeness. Throws DomainError("not-a-fan: ...") on failure.
Fan validate_fan(int ambient_rank, std::vector<Cone> cones);

// Replaces every cone containing v by the joins of v with its faces not
// containing v. v must lie in the support.
Fan stellar_subdivision(const Fan& f, const IntVec& v);

// Every cone of fine inside a cone of coarse, with equal supports.
bool refine_check(const Fan& fine, const Fan& coarse);

Fan common_refinement(const Fan& f1, const Fan& f2);

// Cones ordered by reverse inclusion; closed points are the cones that are
// not proper faces of another cone.
struct OrbitPoset {
    Fan fan;
    std::vector<std::vector<bool>> contains; // contains[i][j]: cone_i contains cone_j
    std::vector<size_t> closed;

    // orbit of cone i lies in the closure of the orbit of cone j
    bool in_closure_of(size_t i, size_t j) const { return contains[i][j]; }
};

OrbitPoset orbit_poset(const Fan& f);
std::vector<Cone> closed_points(const Fan& f);

// Smallest cone of coarse containing c (a cone of fine); refine_check is
// the caller's contract.
Cone orbit_map(const Fan& fine, const Fan& coarse, const Cone& c);

// Maximum absolute ray coordinate.
Int height(const Fan& f);

// Primitive vectors of Z^2 with coordinates bounded by h, in angular order.
std::vector<IntVec> primitive_vectors_up_to(int h);

// All complete fans in rank 2 whose rays have coordinates bounded by
// max_height. Grows exponentially; guarded.
std::vector<Fan> enumerate_complete_fans(int max_height);

// The complete rank-2 fan on every primitive vector of height <= h.
Fan full_fan(int h);

Fan random_complete_fan(int max_height, Rng& rng);

// Subdivides every maximal cone at the primitive sum of its rays, `stages`
// times; returns base, stage 1, ..., stage `stages`.
std::vector<Fan> stellar_tower(const Fan& base, int stages);

} // namespace toric
