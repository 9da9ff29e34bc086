#pragma once

#include "toriclab/truncated_series.hpp"

#include <vector>

namespace toric {

// Numerical semigroup given by its minimal generators. The conductor and
// the Apery set relative to the smallest generator are computed (and the
// invariants checked) on construction.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<Int> generators);

    const std::vector<Int>& generators() const { return generators_; }
    const Int& conductor() const { return conductor_; }
    bool contains(const Int& n) const;
    // number of positive integers outside the semigroup
    Int gap_count() const;
    const Int& multiplicity() const { return generators_.front(); }

    bool operator==(const NumericalSemigroup& o) const { return generators_ == o.generators_; }

private:
    std::vector<Int> generators_;
    Int conductor_;
    std::vector<Int> apery_; // apery_[r] = least element congruent to r mod multiplicity
};

// Characteristic exponents beta_0 < beta_1 < ... < beta_g with a strictly
// decreasing gcd chain ending at 1.
class CharExponents {
public:
    explicit CharExponents(std::vector<Int> beta);

    const std::vector<Int>& beta() const { return beta_; }
    bool operator==(const CharExponents& o) const { return beta_ == o.beta_; }

private:
    std::vector<Int> beta_;
};

// Semigroup of t-orders of the subalgebra k[x(t), y(t)] of k[[t]].
// The achieved orders below an adaptive working precision are computed
// exactly by order-triangulating the span of the monomials x^i y^j; the
// run [c, c + multiplicity) of achieved orders certifies the conductor.
// Throws ComputationError("truncation-exhausted") when the certificate
// does not fit below the series precision.
NumericalSemigroup value_semigroup(const TruncatedSeries& x, const TruncatedSeries& y);

// The Zariski relations: beta_bar_{i+1} = n_i beta_bar_i + beta_{i+1} - beta_i.
NumericalSemigroup semigroup_from_char_exponents(const CharExponents& b);

// Inverse recursion; requires the plane-branch condition
// n_i * beta_bar_i in <beta_bar_0, ..., beta_bar_{i-1}> with n_i > 1.
CharExponents char_exponents_from_semigroup(const NumericalSemigroup& g);

// (y^p - x^{p+1})^{p^2} - x^{(p^2+1)(p+1)} for series over F_p; the
// eliminant of the three-equation presentation of the branch.
TruncatedSeries curve_equation_residual(const TruncatedSeries& x, const TruncatedSeries& y);

// Substitutes x = t^{p^3}, y = t^{p^3+p^2} + t^{p^3+p^2+p+1} over F_p and
// reports whether the eliminant vanishes to precision T. T must exceed the
// top substituted exponent p^3 (p^2+1)(p+1).
bool verify_curve_equation(const Int& p, std::int64_t truncation);

} // namespace toric
