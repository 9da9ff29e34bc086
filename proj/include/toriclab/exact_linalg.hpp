#pragma once

#include "toriclab/ints.hpp"

#include <optional>
#include <vector>

namespace toric {

// Rectangular matrix of arbitrary-precision integers. Rows may be
// linearly dependent.
class IntMatrix {
public:
    IntMatrix() : cols_(0) {}
    IntMatrix(std::vector<IntVec> rows, size_t cols);
    explicit IntMatrix(std::vector<IntVec> rows); // cols from first row; must be nonempty

    static IntMatrix identity(size_t n);
    static IntMatrix zero(size_t rows, size_t cols);

    size_t row_count() const { return rows_.size(); }
    size_t col_count() const { return cols_; }
    const IntVec& row(size_t i) const { return rows_[i]; }
    IntVec& row(size_t i) { return rows_[i]; }
    const std::vector<IntVec>& rows() const { return rows_; }
    const Int& at(size_t i, size_t j) const { return rows_[i][j]; }
    Int& at(size_t i, size_t j) { return rows_[i][j]; }

    IntMatrix transposed() const;
    bool operator==(const IntMatrix& o) const { return cols_ == o.cols_ && rows_ == o.rows_; }

private:
    std::vector<IntVec> rows_;
    size_t cols_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// Determinant of a square matrix, by exact fraction-free elimination.
Int determinant(const IntMatrix& a);

// Rank over the rationals.
size_t rational_rank(const IntMatrix& a);

// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

// left * A * right = diag(diagonal), with left and right unimodular and
// d1 | d2 | ... (trailing zeros allowed). diagonal has min(rows, cols)
// entries, all non-negative.
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix right;
    std::vector<Int> diagonal;

    IntMatrix diagonal_matrix(size_t rows, size_t cols) const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Subgroup of Z^ambient_rank spanned by the rows of `generators`.
// Zero generator rows are dropped on construction.
struct Lattice {
    int ambient_rank = 0;
    IntMatrix generators;

    Lattice() = default;
    Lattice(int rank, IntMatrix gens);
};

bool lattice_contains(const Lattice& l, const IntVec& v);

// Integer coefficients c with c * generators = v, if any.
std::optional<IntVec> solve_in_lattice(const Lattice& l, const IntVec& v);

size_t lattice_rank(const Lattice& l);

// Smallest saturated lattice with the same rational span.
Lattice saturate(const Lattice& l);

bool is_saturated(const Lattice& l);

// |det| of a basis when the lattice has full rank; nullopt means the
// index is infinite.
std::optional<Int> sublattice_index(const Lattice& l);

// Basis-independent equality, by mutual membership of generators.
bool lattices_equal(const Lattice& a, const Lattice& b);

// Elementary divisors > 1 of saturate(L)/L, with one witness vector per
// divisor: witnesses[i] is outside L while torsion_divisors[i] * witnesses[i]
// is inside.
struct SaturationData {
    std::vector<Int> torsion_divisors;
    std::vector<IntVec> witnesses;
};

SaturationData saturation_data(const Lattice& l);

// Integer kernel basis of x * A = 0 (row relations).
std::vector<IntVec> left_kernel_basis(const IntMatrix& a);

} // namespace toric
