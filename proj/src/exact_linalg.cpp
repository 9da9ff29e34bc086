#include "toriclab/exact_linalg.hpp"

#include <algorithm>

namespace toric {

IntMatrix::IntMatrix(std::vector<IntVec> rows, size_t cols) : rows_(std::move(rows)), cols_(cols) {
    for (const IntVec& r : rows_)
        if (r.size() != cols_)
            throw DomainError("matrix is not rectangular");
}

IntMatrix::IntMatrix(std::vector<IntVec> rows) {
    if (rows.empty()) throw DomainError("matrix needs at least one row to infer its width");
    cols_ = rows.front().size();
    rows_ = std::move(rows);
    for (const IntVec& r : rows_)
        if (r.size() != cols_)
            throw DomainError("matrix is not rectangular");
}

IntMatrix IntMatrix::identity(size_t n) {
    std::vector<IntVec> rows(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return IntMatrix(std::move(rows), n);
}

IntMatrix IntMatrix::zero(size_t rows, size_t cols) {
    return IntMatrix(std::vector<IntVec>(rows, IntVec(cols, 0)), cols);
}

IntMatrix IntMatrix::transposed() const {
    std::vector<IntVec> rows(cols_, IntVec(rows_.size(), 0));
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < cols_; ++j) rows[j][i] = rows_[i][j];
    return IntMatrix(std::move(rows), rows_.size());
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.col_count() != b.row_count()) throw DomainError("matrix product: shape mismatch");
    IntMatrix r = IntMatrix::zero(a.row_count(), b.col_count());
    for (size_t i = 0; i < a.row_count(); ++i)
        for (size_t k = 0; k < a.col_count(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.col_count(); ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Int determinant(const IntMatrix& a) {
    if (a.row_count() != a.col_count()) throw DomainError("determinant of non-square matrix");
    size_t n = a.row_count();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    std::vector<IntVec> m;
    m.reserve(n);
    for (size_t i = 0; i < n; ++i) m.push_back(a.row(i));
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

size_t rational_rank(const IntMatrix& a) {
    std::vector<IntVec> m;
    for (const IntVec& r : a.rows())
        if (!is_zero_vec(r)) m.push_back(r);
    size_t rank = 0;
    size_t cols = a.col_count();
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            Int g = int_gcd(m[rank][col], m[i][col]);
            Int ca = m[rank][col] / g, ci = m[i][col] / g;
            for (size_t j = col; j < cols; ++j) m[i][j] = m[i][j] * ca - m[rank][j] * ci;
        }
        ++rank;
    }
    return rank;
}

namespace {

// Row/column elimination to Smith form, tracking both transforms.
struct SnfWork {
    std::vector<IntVec> a; // m x n
    std::vector<IntVec> u; // m x m, tracks row ops
    std::vector<IntVec> v; // n x n, tracks col ops
    size_t m, n;

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (size_t r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
    }
    void add_row(size_t dst, size_t src, const Int& c) { // row dst += c * row src
        for (size_t j = 0; j < n; ++j) a[dst][j] += c * a[src][j];
        for (size_t j = 0; j < m; ++j) u[dst][j] += c * u[src][j];
    }
    void add_col(size_t dst, size_t src, const Int& c) {
        for (size_t r = 0; r < m; ++r) a[r][dst] += c * a[r][src];
        for (size_t r = 0; r < n; ++r) v[r][dst] += c * v[r][src];
    }
    void negate_row(size_t i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = -a[i][j];
        for (size_t j = 0; j < m; ++j) u[i][j] = -u[i][j];
    }
};

} // namespace

IntMatrix SmithDecomposition::diagonal_matrix(size_t rows, size_t cols) const {
    IntMatrix d = IntMatrix::zero(rows, cols);
    for (size_t i = 0; i < diagonal.size(); ++i) d.at(i, i) = diagonal[i];
    return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& mat) {
    if (mat.row_count() == 0) throw DomainError("smith_normal_form: empty matrix");
    SnfWork w;
    w.m = mat.row_count();
    w.n = mat.col_count();
    w.a = mat.rows();
    w.u = IntMatrix::identity(w.m).rows();
    w.v = IntMatrix::identity(w.n).rows();

    size_t kmax = std::min(w.m, w.n);
    for (size_t k = 0; k < kmax; ++k) {
        for (;;) {
            // pivot: minimal nonzero absolute value in the trailing block
            size_t pi = w.m, pj = w.n;
            Int best = 0;
            for (size_t i = k; i < w.m; ++i)
                for (size_t j = k; j < w.n; ++j) {
                    if (w.a[i][j] == 0) continue;
                    Int mag = int_abs(w.a[i][j]);
                    if (pi == w.m || mag < best) { best = mag; pi = i; pj = j; }
                }
            if (pi == w.m) { // block is zero; done
                k = kmax;
                break;
            }
            w.swap_rows(k, pi);
            w.swap_cols(k, pj);
            if (w.a[k][k] < 0) w.negate_row(k);

            bool clean = true;
            for (size_t i = k + 1; i < w.m; ++i) {
                if (w.a[i][k] == 0) continue;
                Int q = w.a[i][k] / w.a[k][k];
                if (q != 0) w.add_row(i, k, -q);
                if (w.a[i][k] != 0) clean = false;
            }
            for (size_t j = k + 1; j < w.n; ++j) {
                if (w.a[k][j] == 0) continue;
                Int q = w.a[k][j] / w.a[k][k];
                if (q != 0) w.add_col(j, k, -q);
                if (w.a[k][j] != 0) clean = false;
            }
            if (!clean) continue; // remainders became new, smaller pivot candidates

            // enforce divisibility: a[k][k] must divide the rest of the block
            bool divides = true;
            for (size_t i = k + 1; i < w.m && divides; ++i)
                for (size_t j = k + 1; j < w.n && divides; ++j)
                    if (w.a[i][j] % w.a[k][k] != 0) {
                        w.add_row(k, i, 1); // pull the offending row in and redo
                        divides = false;
                    }
            if (divides) break;
        }
        if (k == kmax) break;
    }

    SmithDecomposition out;
    out.diagonal.resize(kmax);
    for (size_t i = 0; i < kmax; ++i) out.diagonal[i] = w.a[i][i];
    out.left = IntMatrix(std::move(w.u), w.m);
    out.right = IntMatrix(std::move(w.v), w.n);
    return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (m.row_count() != m.col_count()) throw DomainError("inverse of non-square matrix");
    size_t n = m.row_count();
    // Gauss-Jordan over the rationals, then clear denominators (all 1 for
    // a unimodular input).
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw DomainError("matrix is singular");
        std::swap(a[col], a[piv]);
        Rat d = a[col][col];
        for (size_t j = 0; j < 2 * n; ++j) a[col][j] /= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<IntVec> inv(n, IntVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Rat& x = a[i][n + j];
            if (boost::multiprecision::denominator(x) != 1)
                throw DomainError("matrix is not unimodular");
            inv[i][j] = boost::multiprecision::numerator(x);
        }
    return IntMatrix(std::move(inv), n);
}

Lattice::Lattice(int rank, IntMatrix gens) : ambient_rank(rank) {
    if (rank <= 0) throw DomainError("lattice ambient rank must be positive");
    std::vector<IntVec> kept;
    for (const IntVec& r : gens.rows()) {
        if (r.size() != static_cast<size_t>(rank))
            throw DomainError("lattice generator length does not match ambient rank");
        if (!is_zero_vec(r)) kept.push_back(r);
    }
    generators = IntMatrix(std::move(kept), rank);
}

namespace {

// Shared machinery: with U A V = D, the equation x A = v becomes
// z D = v V with z = x U^{-1} integral iff x is.
struct MembershipSolver {
    SmithDecomposition snf;
    size_t m, n;

    explicit MembershipSolver(const IntMatrix& a)
        : snf(smith_normal_form(a)), m(a.row_count()), n(a.col_count()) {}

    std::optional<IntVec> solve(const IntVec& v) const {
        IntVec y(n, 0); // y = v * V
        for (size_t j = 0; j < n; ++j) {
            Int s = 0;
            for (size_t i = 0; i < n; ++i) s += v[i] * snf.right.at(i, j);
            y[j] = s;
        }
        IntVec z(m, 0);
        size_t k = snf.diagonal.size();
        for (size_t j = 0; j < n; ++j) {
            if (j < k && snf.diagonal[j] != 0) {
                if (y[j] % snf.diagonal[j] != 0) return std::nullopt;
                z[j] = y[j] / snf.diagonal[j];
            } else if (y[j] != 0) {
                return std::nullopt;
            }
        }
        // x = z * U
        IntVec x(m, 0);
        for (size_t j = 0; j < m; ++j) {
            Int s = 0;
            for (size_t i = 0; i < m; ++i) s += z[i] * snf.left.at(i, j);
            x[j] = s;
        }
        return x;
    }
};

} // namespace

std::optional<IntVec> solve_in_lattice(const Lattice& l, const IntVec& v) {
    if (v.size() != static_cast<size_t>(l.ambient_rank))
        throw DomainError("lattice membership: vector length " + std::to_string(v.size()) +
                          " does not match ambient rank " + std::to_string(l.ambient_rank));
    if (l.generators.row_count() == 0) {
        if (is_zero_vec(v)) return IntVec{};
        return std::nullopt;
    }
    return MembershipSolver(l.generators).solve(v);
}

bool lattice_contains(const Lattice& l, const IntVec& v) {
    return solve_in_lattice(l, v).has_value();
}

size_t lattice_rank(const Lattice& l) {
    if (l.generators.row_count() == 0) return 0;
    return rational_rank(l.generators);
}

Lattice saturate(const Lattice& l) {
    if (l.generators.row_count() == 0)
        return Lattice(l.ambient_rank, IntMatrix(std::vector<IntVec>{}, l.ambient_rank));
    // Row span of A equals that of D V^{-1}; dropping the elementary
    // divisors leaves the rows of V^{-1} indexed by nonzero entries,
    // a subset of a basis of Z^n, hence saturated.
    SmithDecomposition snf = smith_normal_form(l.generators);
    IntMatrix vinv = unimodular_inverse(snf.right);
    std::vector<IntVec> rows;
    for (size_t i = 0; i < snf.diagonal.size(); ++i)
        if (snf.diagonal[i] != 0) rows.push_back(vinv.row(i));
    return Lattice(l.ambient_rank, IntMatrix(std::move(rows), l.ambient_rank));
}

bool is_saturated(const Lattice& l) {
    if (l.generators.row_count() == 0) return true;
    SmithDecomposition snf = smith_normal_form(l.generators);
    for (const Int& d : snf.diagonal)
        if (d > 1) return false;
    return true;
}

std::optional<Int> sublattice_index(const Lattice& l) {
    if (lattice_rank(l) != static_cast<size_t>(l.ambient_rank)) return std::nullopt;
    SmithDecomposition snf = smith_normal_form(l.generators);
    Int idx = 1;
    for (const Int& d : snf.diagonal) idx *= d;
    return int_abs(idx);
}

bool lattices_equal(const Lattice& a, const Lattice& b) {
    if (a.ambient_rank != b.ambient_rank) return false;
    for (const IntVec& g : a.generators.rows())
        if (!lattice_contains(b, g)) return false;
    for (const IntVec& g : b.generators.rows())
        if (!lattice_contains(a, g)) return false;
    return true;
}

SaturationData saturation_data(const Lattice& l) {
    SaturationData out;
    if (l.generators.row_count() == 0) return out;
    SmithDecomposition snf = smith_normal_form(l.generators);
    IntMatrix vinv = unimodular_inverse(snf.right);
    for (size_t i = 0; i < snf.diagonal.size(); ++i) {
        if (snf.diagonal[i] > 1) {
            out.torsion_divisors.push_back(snf.diagonal[i]);
            out.witnesses.push_back(vinv.row(i));
        }
    }
    return out;
}

std::vector<IntVec> left_kernel_basis(const IntMatrix& a) {
    // x A = 0 iff (x U^{-1}) D = 0 iff z has support on zero diagonal slots;
    // the corresponding rows of U are a kernel basis.
    SmithDecomposition snf = smith_normal_form(a);
    std::vector<IntVec> basis;
    size_t m = a.row_count();
    for (size_t i = 0; i < m; ++i) {
        bool zero_slot = i >= snf.diagonal.size() || snf.diagonal[i] == 0;
        if (zero_slot) basis.push_back(snf.left.row(i));
    }
    return basis;
}

} // namespace toric
