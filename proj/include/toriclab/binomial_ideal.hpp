#pragma once

#include "toriclab/branch_semigroup.hpp"
#include "toriclab/exact_linalg.hpp"
#include "toriclab/mpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toric {

// u^m - lambda * u^n. Common monomial factors of m and n are cancelled on
// construction, so the stored supports are disjoint.
struct Binomial {
    IntVec m;
    IntVec n;
    Rat lambda = 1;

    Binomial(IntVec m_, IntVec n_, Rat lambda_ = 1);
};

struct DeformationTerm {
    IntVec exponent;
    Rat coefficient;
};

// Weighted binomial equations with optional higher-order deformation terms,
// one (possibly empty) term list per equation.
struct BinomialSystem {
    std::vector<std::string> variables;
    IntVec weights;
    CoefficientField field;
    std::vector<Binomial> binomials;
    std::vector<std::vector<DeformationTerm>> deformations;

    BinomialSystem(std::vector<std::string> variables_, IntVec weights_, CoefficientField field_,
                   std::vector<Binomial> binomials_,
                   std::vector<std::vector<DeformationTerm>> deformations_ = {});

    size_t variable_count() const { return variables.size(); }
    // equation ell as a polynomial u^m - lambda u^n + deformation terms
    MPoly equation(size_t ell) const;
};

// Multiplicative character on a lattice, given by its values on the
// generator rows; consistency across row relations is checked.
struct PartialCharacter {
    Lattice lattice;
    std::vector<Rat> values;
    CoefficientField field;

    PartialCharacter(Lattice lattice_, std::vector<Rat> values_, CoefficientField field_);

    // value on an arbitrary lattice element; nullopt when v is outside
    std::optional<Rat> value_on(const IntVec& v) const;
};

// Lattice spanned by the vectors m - n with the character lambda_ell on
// the ell-th generator.
std::pair<Lattice, PartialCharacter> lattice_of(const BinomialSystem& system);

struct PrimalityReport {
    bool saturated = false;
    std::vector<Int> torsion_divisors;
    std::optional<IntVec> witness; // outside L, torsion multiple inside
};

// Lattice-ideal primality at the Laurent level: prime iff the lattice of
// exponent differences is saturated (character consistency is enforced by
// lattice_of).
PrimalityReport primality_report(const BinomialSystem& system);

// Whether u^m - lambda u^n lies in the Laurent lattice ideal of chi:
// m - n in the lattice and chi(m - n) = lambda.
bool laurent_membership(const Binomial& b, const PartialCharacter& chi);

struct EquationWeightReport {
    Int weight_m;
    Int weight_n;
    bool balanced = false;
    std::vector<Int> deformation_weights;
    bool deformations_strictly_heavier = false;
};

struct OverweightReport {
    bool overweight = false;
    std::vector<EquationWeightReport> equations;
};

// Balanced binomials plus strictly heavier deformation terms.
OverweightReport is_overweight(const BinomialSystem& system);

// Canonical binomial presentation of the monomial curve of a plane-branch
// semigroup: one relation n_i * u_i^{...} per generator, second monomial in
// digit form with exponents below the n_j. Optionally chains each equation
// to the next variable as a -u_{i+1} deformation term.
BinomialSystem plane_branch_chain_system(const NumericalSemigroup& s, const CoefficientField& field,
                                         bool deformed);

} // namespace toric
