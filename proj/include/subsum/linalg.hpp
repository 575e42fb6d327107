#pragma once

// Dense matrices over a finite field.  A Matrix carries its Field so mixed
// arithmetic between matrices built over different fields is rejected at
// runtime (params_mismatch) rather than silently producing garbage.  Rows and
// entries are stored row-major; all indices are 0-based.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "subsum/errors.hpp"
#include "subsum/field.hpp"

namespace subsum {

class Matrix {
public:
    Matrix(const Field& F, std::size_t rows, std::size_t cols);  // zero-filled
    static Matrix identity(const Field& F, std::size_t n);

    const Field& field() const noexcept { return F_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Fq at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Fq v);

    Matrix mul(const Matrix& other) const;

    // In-place Gauss-Jordan elimination to reduced row echelon form.
    // Returns the rank; pivots, if non-null, receives the pivot column of
    // each nonzero row.
    std::size_t rref(std::vector<std::size_t>* pivots = nullptr);
    std::size_t rank() const;  // on a copy

    Matrix inverse() const;  // throws singular_matrix
    Fq determinant() const;  // on a copy
    bool invertible() const;

    Matrix transpose() const;
    bool equals(const Matrix& other) const;

    // Entrywise Frobenius a -> a^(p^s).
    Matrix frobenius(std::uint32_t s) const;

    // Rows i..j swapped; used by the decomposition's basis-repair step.
    void swap_rows(std::size_t i, std::size_t j);

    std::vector<Fq> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Fq>& r);

private:
    void check_same_field(const Matrix& other) const;

    Field F_;
    std::size_t rows_, cols_;
    std::vector<Fq> data_;
};

// A * v with v as a column vector.
std::vector<Fq> mat_vec(const Matrix& a, const std::vector<Fq>& v);

// Identity with rows k and t swapped (k == t gives the identity) / single 1
// at row i, column j.  Indices are 0-based like the rest of the API; the
// file formats stay 1-based.
Matrix perm_matrix(const Field& F, std::size_t k, std::size_t t, std::size_t n);
Matrix unit_matrix(const Field& F, std::size_t i, std::size_t j, std::size_t n);

// Stack a on top of b (must agree on field and column count).
Matrix vstack(const Matrix& a, const Matrix& b);

// "1,0,0;0,1,0;0,0,1" — rows separated by ';', entries by ','.  Whitespace
// around tokens is permitted.  Validates shape and entry range against F.
Matrix parse_matrix(const Field& F, const std::string& text);
std::string format_matrix(const Matrix& a);

}  // namespace subsum
