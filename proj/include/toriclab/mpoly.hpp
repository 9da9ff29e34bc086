#pragma once

#include "toriclab/coefficient_field.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace toric {

// Sparse multivariate polynomial over a coefficient field. Exponents are
// word-sized; only nonzero terms are stored.
class MPoly {
public:
    using Exps = std::vector<std::int64_t>;

    MPoly(CoefficientField field, size_t nvars);
    static MPoly monomial(const CoefficientField& field, const Exps& exps, const Rat& coeff);

    const CoefficientField& field() const { return field_; }
    size_t nvars() const { return nvars_; }
    const std::map<Exps, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exps& exps, const Rat& coeff);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Rat& c) const;

    // Formal partial derivative; the exponent enters the coefficient through
    // the field, so in characteristic p the derivative of u^p vanishes.
    MPoly derivative(size_t var) const;

    bool operator==(const MPoly& o) const;

    // Laurent polynomial in t obtained from u_i = t^{a_i}; keys are the
    // pairings <e, a>, values the (normalized, nonzero) summed coefficients.
    std::map<std::int64_t, Rat> restrict_to_cocharacter(const std::vector<std::int64_t>& a) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    CoefficientField field_;
    size_t nvars_;
    std::map<Exps, Rat> terms_;
};

// Laplace-expansion determinant of a square matrix of polynomials.
MPoly mpoly_determinant(const std::vector<std::vector<MPoly>>& m);

} // namespace toric
