#include "toriclab/toric_jacobian.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

const Int kSamplePrime = (Int(1) << 61) - 1;

IntMatrix submatrix(const IntMatrix& a, const std::vector<size_t>& rows,
                    const std::vector<size_t>& cols) {
    std::vector<IntVec> out;
    for (size_t i : rows) {
        IntVec r;
        for (size_t j : cols) r.push_back(a.at(i, j));
        out.push_back(std::move(r));
    }
    return IntMatrix(std::move(out), cols.size());
}

} // namespace

std::vector<std::vector<size_t>> index_subsets(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n) return out;
    std::vector<size_t> cur(k);
    for (size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

RelationMatrix::RelationMatrix(IntMatrix rows_) : rows(std::move(rows_)) {
    for (const IntVec& r : rows.rows())
        if (is_zero_vec(r)) throw DomainError("relation matrix rows must be nonzero");
}

RelationMatrix relation_matrix(const BinomialSystem& system) {
    std::vector<IntVec> rows;
    for (const Binomial& b : system.binomials) rows.push_back(vec_sub(b.m, b.n));
    return RelationMatrix(IntMatrix(std::move(rows), system.variable_count()));
}

SymbolicJacobian jacobian(const BinomialSystem& system) {
    if (system.field.characteristic == 0)
        throw DomainError("jacobian reduction requires a prime characteristic");
    SymbolicJacobian j{system.field, {}};
    for (size_t ell = 0; ell < system.binomials.size(); ++ell) {
        MPoly eq = system.equation(ell);
        std::vector<MPoly> row;
        for (size_t v = 0; v < system.variable_count(); ++v) row.push_back(eq.derivative(v));
        j.entries.push_back(std::move(row));
    }
    return j;
}

MPoly jacobian_minor(const SymbolicJacobian& j, const std::vector<size_t>& rows,
                     const std::vector<size_t>& cols) {
    if (rows.size() != cols.size()) throw DomainError("minor needs as many rows as columns");
    std::vector<std::vector<MPoly>> m;
    for (size_t r : rows) {
        std::vector<MPoly> row;
        for (size_t c : cols) row.push_back(j.entries.at(r).at(c));
        m.push_back(std::move(row));
    }
    return mpoly_determinant(m);
}

std::vector<TameProjection> find_tame_projections(const RelationMatrix& relations,
                                                  const IntMatrix& gamma, const Int& p) {
    if (!is_prime(p)) throw DomainError("characteristic must be prime");
    size_t big_l = relations.rows.row_count();
    size_t n = relations.rows.col_count();
    size_t r = gamma.col_count();
    if (gamma.row_count() != n)
        throw DomainError("gamma needs one row per variable of the relation matrix");
    if (n <= r) throw DomainError("relation matrix has no complementary variables to keep");
    size_t c = n - r;
    if (big_l < c) throw DomainError("too few relations for a rank-c minor");

    auto row_choices = big_l == c ? std::vector<std::vector<size_t>>{index_subsets(big_l, c)[0]}
                                  : index_subsets(big_l, c);

    std::map<std::vector<size_t>, TameProjection> certified;
    for (const auto& cols : index_subsets(n, c)) {
        std::vector<size_t> kept;
        for (size_t i = 0; i < n; ++i)
            if (!std::binary_search(cols.begin(), cols.end(), i)) kept.push_back(i);

        for (const auto& rows : row_choices) {
            Int minor = determinant(submatrix(relations.rows, rows, cols));
            if (minor % p == 0) continue;

            std::vector<IntVec> kept_gamma;
            for (size_t i : kept) kept_gamma.push_back(gamma.row(i));
            auto index = sublattice_index(Lattice(static_cast<int>(r),
                                                  IntMatrix(std::move(kept_gamma), r)));
            if (!index)
                throw ComputationError("minor nonzero mod " + p.str() +
                                       " but the kept generators are rank-deficient");
            if (big_l == c && int_abs(minor) != *index)
                throw ComputationError("minor " + minor.str() + " does not match the index " +
                                       index->str());
            if (*index % p == 0) continue;
            certified.emplace(kept, TameProjection{kept, minor, *index});
        }
    }

    if (certified.empty())
        throw ComputationError("no tame projection found: every rank-c minor vanishes mod " +
                               p.str());
    std::vector<TameProjection> out;
    for (auto& [_, proj] : certified) out.push_back(std::move(proj));
    return out;
}

namespace {

Int eval_monomial(const IntVec& exps, const std::vector<Int>& point, const Int& prime) {
    Int v = 1;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        v = v * pow_mod(point[i], exps[i], prime) % prime;
    }
    return v;
}

Int mod_p(const Int& x, const Int& prime) {
    Int r = x % prime;
    return r < 0 ? r + prime : r;
}

} // namespace

bool minor_congruence_check(const BinomialSystem& system, const std::vector<size_t>& g_cols,
                            const std::vector<size_t>& l_rows, int trials, Rng& rng) {
    for (const auto& terms : system.deformations)
        if (!terms.empty())
            throw DomainError("congruence check needs a pure binomial system");
    for (const Binomial& b : system.binomials) {
        if (dot(b.m, system.weights) != dot(b.n, system.weights))
            throw DomainError("congruence check needs weight-balanced binomials");
        if (!system.field.eq(b.lambda, 1))
            throw DomainError("congruence check needs monic binomials (lambda = 1)");
    }
    if (g_cols.size() != l_rows.size())
        throw DomainError("minor selection needs as many columns as rows");

    const Int& prime = kSamplePrime;
    size_t c = g_cols.size();
    RelationMatrix rel = relation_matrix(system);
    Int det_minor = mod_p(determinant(submatrix(rel.rows, l_rows, g_cols)), prime);

    for (int trial = 0; trial < trials; ++trial) {
        Int t = 0;
        while (t == 0) t = Int(rng.below(1ULL << 61)) % prime;
        std::vector<Int> point;
        for (size_t i = 0; i < system.variable_count(); ++i)
            point.push_back(pow_mod(t, system.weights[i], prime));

        // jacobian of the binomials with integer coefficients, evaluated mod prime
        std::vector<IntVec> jac(c, IntVec(c, 0));
        for (size_t a = 0; a < c; ++a) {
            const Binomial& b = system.binomials[l_rows[a]];
            for (size_t bcol = 0; bcol < c; ++bcol) {
                size_t v = g_cols[bcol];
                Int entry = 0;
                if (b.m[v] != 0) {
                    IntVec e = b.m;
                    e[v] -= 1;
                    entry += b.m[v] * eval_monomial(e, point, prime);
                }
                if (b.n[v] != 0) {
                    IntVec e = b.n;
                    e[v] -= 1;
                    Rat lam = system.field.normalize(b.lambda);
                    entry -= boost::multiprecision::numerator(lam) * b.n[v] *
                             eval_monomial(e, point, prime);
                }
                jac[a][bcol] = mod_p(entry, prime);
            }
        }
        Int j_det = mod_p(determinant(IntMatrix(jac, c)), prime);

        Int lhs = j_det;
        for (size_t v : g_cols) lhs = lhs * point[v] % prime;

        Int rhs = det_minor;
        for (size_t a : l_rows) rhs = rhs * eval_monomial(system.binomials[a].m, point, prime) % prime;

        if (lhs != rhs) return false;
    }
    return true;
}

bool projection_is_finite(const IntMatrix& gamma, const std::vector<size_t>& kept) {
    size_t r = gamma.col_count();
    if (kept.size() != r) throw DomainError("kept set must have exactly rank-many indices");
    // exact rational solve of gamma_j = sum x_i gamma_{kept_i}
    std::vector<std::vector<Rat>> base(r, std::vector<Rat>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t d = 0; d < r; ++d) base[d][i] = Rat(gamma.at(kept[i], d)); // columns = kept rows

    for (size_t j = 0; j < gamma.row_count(); ++j) {
        std::vector<std::vector<Rat>> a = base;
        std::vector<Rat> b(r);
        for (size_t d = 0; d < r; ++d) b[d] = Rat(gamma.at(j, d));
        // gaussian elimination
        std::vector<Rat> x(r, 0);
        for (size_t col = 0; col < r; ++col) {
            size_t piv = col;
            while (piv < r && a[piv][col] == 0) ++piv;
            if (piv == r) throw DomainError("dependent kept set");
            std::swap(a[col], a[piv]);
            std::swap(b[col], b[piv]);
            for (size_t i = col + 1; i < r; ++i) {
                if (a[i][col] == 0) continue;
                Rat f = a[i][col] / a[col][col];
                for (size_t k = col; k < r; ++k) a[i][k] -= f * a[col][k];
                b[i] -= f * b[col];
            }
        }
        for (size_t col = r; col-- > 0;) {
            Rat s = b[col];
            for (size_t k = col + 1; k < r; ++k) s -= a[col][k] * x[k];
            x[col] = s / a[col][col];
        }
        for (const Rat& xi : x)
            if (xi < 0) return false;
    }
    return true;
}

bool minor_nonzero_on_cocharacters(const MPoly& minor, int trials, Rng& rng) {
    if (minor.is_zero()) return false;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<std::int64_t> a(minor.nvars());
        bool all_zero = true;
        while (all_zero) {
            for (auto& x : a) {
                x = rng.range(-100, 100);
                if (x != 0) all_zero = false;
            }
        }
        if (minor.restrict_to_cocharacter(a).empty()) return false;
    }
    return true;
}

} // namespace toric
