#pragma once

#include "toriclab/binomial_ideal.hpp"

#include <vector>

namespace toric {

// Rows m - n of a binomial system, all nonzero.
struct RelationMatrix {
    IntMatrix rows;

    explicit RelationMatrix(IntMatrix rows_);
};

RelationMatrix relation_matrix(const BinomialSystem& system);

// Formal jacobian over a prime field: entry (ell, j) is the partial
// derivative of equation ell by variable j, deformation terms included.
struct SymbolicJacobian {
    CoefficientField field;
    std::vector<std::vector<MPoly>> entries; // L x N
};

SymbolicJacobian jacobian(const BinomialSystem& system);

MPoly jacobian_minor(const SymbolicJacobian& j, const std::vector<size_t>& rows,
                     const std::vector<size_t>& cols);

// Monomial projection onto the kept coordinates whose group index is prime
// to the characteristic.
struct TameProjection {
    std::vector<size_t> kept_variables;
    Int minor_value;
    Int index;
};

// Enumerates c x c minors of the relation matrix (c = N - r), keeps those
// nonzero mod p, and certifies each against the index of the lattice
// spanned by the kept gamma rows. When the relation matrix is square the
// certified minors must match the index exactly.
std::vector<TameProjection> find_tame_projections(const RelationMatrix& relations,
                                                  const IntMatrix& gamma, const Int& p);

// Samples the congruence U_{k_1}...U_{k_c} J_{G,L'} = (prod_{l in L'} U^{m^l}) Det_{G,L'}
// at random points u_i = t^{gamma_i} of the parametrized torus over the
// prime field of order 2^61 - 1.
bool minor_congruence_check(const BinomialSystem& system, const std::vector<size_t>& g_cols,
                            const std::vector<size_t>& l_rows, int trials, Rng& rng);

// Whether every gamma row lies in the rational cone positively spanned by
// the kept rows (the kept rows must be linearly independent).
bool projection_is_finite(const IntMatrix& gamma, const std::vector<size_t>& kept);

// Evaluates the polynomial along `trials` random one-parameter subgroups
// u = (t^{a_1}, ..., t^{a_N}); true when every sample is a nonzero Laurent
// polynomial in t.
bool minor_nonzero_on_cocharacters(const MPoly& minor, int trials, Rng& rng);

// All k-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<size_t>> index_subsets(size_t n, size_t k);

} // namespace toric
