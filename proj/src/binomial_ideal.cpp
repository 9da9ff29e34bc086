#include "toriclab/binomial_ideal.hpp"

#include <algorithm>
#include <limits>

namespace toric {

namespace {

std::int64_t to_i64(const Int& x) {
    if (x < std::numeric_limits<std::int64_t>::min() / 2 ||
        x > std::numeric_limits<std::int64_t>::max() / 2)
        throw ComputationError("exponent " + x.str() + " exceeds the supported range");
    return static_cast<std::int64_t>(x);
}

MPoly::Exps to_exps(const IntVec& v) {
    MPoly::Exps e(v.size());
    for (size_t i = 0; i < v.size(); ++i) e[i] = to_i64(v[i]);
    return e;
}

} // namespace

Binomial::Binomial(IntVec m_, IntVec n_, Rat lambda_)
    : m(std::move(m_)), n(std::move(n_)), lambda(std::move(lambda_)) {
    if (m.size() != n.size()) throw DomainError("binomial exponent vectors differ in length");
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0 || n[i] < 0) throw DomainError("binomial exponents must be non-negative");
        Int common = std::min(m[i], n[i]);
        m[i] -= common;
        n[i] -= common;
    }
    if (m == n) throw DomainError("binomial has equal monomials");
}

BinomialSystem::BinomialSystem(std::vector<std::string> variables_, IntVec weights_,
                               CoefficientField field_, std::vector<Binomial> binomials_,
                               std::vector<std::vector<DeformationTerm>> deformations_)
    : variables(std::move(variables_)),
      weights(std::move(weights_)),
      field(field_),
      binomials(std::move(binomials_)),
      deformations(std::move(deformations_)) {
    size_t n = variables.size();
    if (n == 0) throw DomainError("binomial system needs at least one variable");
    if (weights.size() != n) throw DomainError("one weight per variable required");
    for (const Int& w : weights)
        if (w <= 0) throw DomainError("weights must be strictly positive");
    for (Binomial& b : binomials) {
        if (b.m.size() != n) throw DomainError("binomial arity does not match the variables");
        b.lambda = field.normalize(b.lambda);
        if (b.lambda == 0) throw DomainError("binomial coefficient lambda must be nonzero");
    }
    deformations.resize(binomials.size());
    for (auto& terms : deformations)
        for (DeformationTerm& t : terms) {
            if (t.exponent.size() != n)
                throw DomainError("deformation term arity does not match the variables");
            for (const Int& e : t.exponent)
                if (e < 0) throw DomainError("deformation exponents must be non-negative");
            t.coefficient = field.normalize(t.coefficient);
            if (t.coefficient == 0) throw DomainError("deformation coefficient must be nonzero");
        }
}

MPoly BinomialSystem::equation(size_t ell) const {
    if (ell >= binomials.size()) throw DomainError("equation index out of range");
    const Binomial& b = binomials[ell];
    MPoly p = MPoly::monomial(field, to_exps(b.m), 1);
    p.add_term(to_exps(b.n), field.neg(b.lambda));
    for (const DeformationTerm& t : deformations[ell]) p.add_term(to_exps(t.exponent), t.coefficient);
    return p;
}

PartialCharacter::PartialCharacter(Lattice lattice_, std::vector<Rat> values_,
                                   CoefficientField field_)
    : lattice(std::move(lattice_)), values(std::move(values_)), field(field_) {
    if (values.size() != lattice.generators.row_count())
        throw DomainError("one character value per lattice generator required");
    for (Rat& v : values) {
        v = field.normalize(v);
        if (v == 0) throw DomainError("character values must be nonzero");
    }
    if (!values.empty()) {
        for (const IntVec& rel : left_kernel_basis(lattice.generators)) {
            Rat prod = 1;
            for (size_t i = 0; i < values.size(); ++i)
                prod = field.mul(prod, field.pow(values[i], rel[i]));
            if (!field.eq(prod, 1))
                throw DomainError("inconsistent character: generator relation " +
                                  vec_to_string(rel) + " forces conflicting values");
        }
    }
}

std::optional<Rat> PartialCharacter::value_on(const IntVec& v) const {
    auto coeffs = solve_in_lattice(lattice, v);
    if (!coeffs) return std::nullopt;
    Rat prod = 1;
    for (size_t i = 0; i < coeffs->size(); ++i)
        prod = field.mul(prod, field.pow(values[i], (*coeffs)[i]));
    return prod;
}

std::pair<Lattice, PartialCharacter> lattice_of(const BinomialSystem& system) {
    std::vector<IntVec> rows;
    std::vector<Rat> values;
    for (const Binomial& b : system.binomials) {
        rows.push_back(vec_sub(b.m, b.n));
        values.push_back(b.lambda);
    }
    Lattice l(static_cast<int>(system.variable_count()),
              IntMatrix(std::move(rows), system.variable_count()));
    PartialCharacter chi(l, values, system.field);
    return {l, chi};
}

PrimalityReport primality_report(const BinomialSystem& system) {
    auto [l, chi] = lattice_of(system);
    (void)chi; // construction already checked consistency
    SaturationData data = saturation_data(l);
    PrimalityReport report;
    report.saturated = data.torsion_divisors.empty();
    report.torsion_divisors = data.torsion_divisors;
    if (!data.witnesses.empty()) report.witness = data.witnesses.front();
    return report;
}

bool laurent_membership(const Binomial& b, const PartialCharacter& chi) {
    auto value = chi.value_on(vec_sub(b.m, b.n));
    return value && chi.field.eq(*value, b.lambda);
}

OverweightReport is_overweight(const BinomialSystem& system) {
    OverweightReport report;
    report.overweight = true;
    for (size_t ell = 0; ell < system.binomials.size(); ++ell) {
        const Binomial& b = system.binomials[ell];
        EquationWeightReport eq;
        eq.weight_m = dot(b.m, system.weights);
        eq.weight_n = dot(b.n, system.weights);
        eq.balanced = eq.weight_m == eq.weight_n;
        eq.deformations_strictly_heavier = true;
        for (const DeformationTerm& t : system.deformations[ell]) {
            Int w = dot(t.exponent, system.weights);
            eq.deformation_weights.push_back(w);
            if (w <= eq.weight_m) eq.deformations_strictly_heavier = false;
        }
        if (!eq.balanced || !eq.deformations_strictly_heavier) report.overweight = false;
        report.equations.push_back(std::move(eq));
    }
    return report;
}

BinomialSystem plane_branch_chain_system(const NumericalSemigroup& s,
                                         const CoefficientField& field, bool deformed) {
    const std::vector<Int>& bar = s.generators();
    size_t g = bar.size() - 1;
    if (g == 0) throw DomainError("a chain presentation needs at least two generators");

    std::vector<Int> e(g + 1), nmul(g + 1);
    e[0] = bar[0];
    for (size_t i = 1; i <= g; ++i) {
        e[i] = int_gcd(e[i - 1], bar[i]);
        nmul[i] = e[i - 1] / e[i];
        if (nmul[i] <= 1)
            throw DomainError("not-a-plane-branch-semigroup: gcd chain does not drop");
    }

    std::vector<std::string> vars;
    for (size_t i = 0; i <= g; ++i) {
        if (i == 0) vars.push_back("x");
        else if (i == 1) vars.push_back("y");
        else vars.push_back("u" + std::to_string(i));
    }

    std::vector<Binomial> binomials;
    for (size_t i = 1; i <= g; ++i) {
        Int target = nmul[i] * bar[i];
        // digit form: target = c_0 bar_0 + sum_{1<=j<i} c_j bar_j, 0 <= c_j < n_j
        std::vector<Int> best;
        std::vector<Int> c(i, 0);
        // lexicographic scan over the bounded digits c_1..c_{i-1}
        for (;;) {
            Int rem = target;
            for (size_t j = 1; j < i; ++j) rem -= c[j] * bar[j];
            if (rem >= 0 && rem % bar[0] == 0) {
                c[0] = rem / bar[0];
                best = c;
                break;
            }
            size_t j = 1;
            while (j < i) {
                c[j] += 1;
                if (c[j] < nmul[j]) break;
                c[j] = 0;
                ++j;
            }
            if (j >= i) break;
        }
        if (best.empty())
            throw DomainError("not-a-plane-branch-semigroup: no digit form for " + target.str());
        IntVec m(g + 1, 0), n(g + 1, 0);
        m[i] = nmul[i];
        for (size_t j = 0; j < i; ++j) n[j] = best[j];
        binomials.emplace_back(m, n, Rat(1));
    }

    std::vector<std::vector<DeformationTerm>> defs(binomials.size());
    if (deformed) {
        for (size_t ell = 0; ell + 1 < binomials.size(); ++ell) {
            IntVec exps(g + 1, 0);
            exps[ell + 2] = 1;
            defs[ell].push_back(DeformationTerm{exps, Rat(-1)});
        }
    }

    IntVec weights(bar.begin(), bar.end());
    return BinomialSystem(vars, weights, field, binomials, defs);
}

} // namespace toric
