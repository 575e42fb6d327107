#include "subsum/linalg.hpp"

#include <sstream>

namespace subsum {

Matrix::Matrix(const Field& F, std::size_t rows, std::size_t cols)
    : F_(F), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

Matrix Matrix::identity(const Field& F, std::size_t n) {
    Matrix a(F, n, n);
    for (std::size_t i = 0; i < n; ++i) a.data_[i * n + i] = 1;
    return a;
}

void Matrix::set(std::size_t i, std::size_t j, Fq v) {
    if (v >= F_.q()) throw std::invalid_argument("matrix entry out of field range");
    data_[i * cols_ + j] = v;
}

void Matrix::check_same_field(const Matrix& other) const {
    if (!F_.same(other.F_)) throw params_mismatch("matrices built over different fields");
}

Matrix Matrix::mul(const Matrix& other) const {
    check_same_field(other);
    if (cols_ != other.rows_) throw params_mismatch("inner dimensions disagree in matrix product");
    Matrix r(F_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Fq aik = data_[i * cols_ + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Fq b = other.data_[k * other.cols_ + j];
                if (b != 0) r.data_[i * other.cols_ + j] = F_.add(r.data_[i * other.cols_ + j], F_.mul(aik, b));
            }
        }
    return r;
}

std::vector<Fq> mat_vec(const Matrix& a, const std::vector<Fq>& v) {
    if (v.size() != a.cols()) throw params_mismatch("vector length disagrees with matrix columns");
    const Field& F = a.field();
    std::vector<Fq> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (a.at(i, j) != 0 && v[j] != 0) out[i] = F.add(out[i], F.mul(a.at(i, j), v[j]));
    return out;
}

Matrix perm_matrix(const Field& F, std::size_t k, std::size_t t, std::size_t n) {
    if (k >= n || t >= n) throw std::invalid_argument("permutation matrix index out of range");
    Matrix a = Matrix::identity(F, n);
    a.swap_rows(k, t);
    return a;
}

Matrix unit_matrix(const Field& F, std::size_t i, std::size_t j, std::size_t n) {
    if (i >= n || j >= n) throw std::invalid_argument("matrix unit index out of range");
    Matrix a(F, n, n);
    a.set(i, j, 1);
    return a;
}

std::size_t Matrix::rref(std::vector<std::size_t>* pivots) {
    if (pivots) pivots->clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && data_[pivot * cols_ + c] == 0) ++pivot;
        if (pivot == rows_) continue;
        swap_rows(r, pivot);
        const Fq inv = F_.inv(data_[r * cols_ + c]);
        for (std::size_t j = c; j < cols_; ++j) data_[r * cols_ + j] = F_.mul(inv, data_[r * cols_ + j]);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const Fq f = data_[i * cols_ + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols_; ++j)
                data_[i * cols_ + j] = F_.sub(data_[i * cols_ + j], F_.mul(f, data_[r * cols_ + j]));
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref();
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw singular_matrix("only square matrices can be inverted");
    const std::size_t n = rows_;
    // Eliminate on [this | I]; the right block becomes the inverse.
    Matrix aug(F_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.data_[i * 2 * n + j] = data_[i * n + j];
        aug.data_[i * 2 * n + n + i] = 1;
    }
    if (aug.rref() < n || [&] {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (aug.data_[i * 2 * n + j] != (i == j ? 1u : 0u)) return true;
            return false;
        }())
        throw singular_matrix("matrix is not invertible");
    Matrix r(F_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.data_[i * n + j] = aug.data_[i * 2 * n + n + j];
    return r;
}

Fq Matrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant requires a square matrix");
    Matrix a = *this;
    const std::size_t n = rows_;
    Fq det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a.data_[pivot * n + c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            a.swap_rows(c, pivot);
            det = F_.neg(det);
        }
        const Fq pc = a.data_[c * n + c];
        det = F_.mul(det, pc);
        const Fq inv = F_.inv(pc);
        for (std::size_t i = c + 1; i < n; ++i) {
            const Fq f = F_.mul(inv, a.data_[i * n + c]);
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j)
                a.data_[i * n + j] = F_.sub(a.data_[i * n + j], F_.mul(f, a.data_[c * n + j]));
        }
    }
    return det;
}

bool Matrix::invertible() const { return rows_ == cols_ && rank() == rows_; }

Matrix Matrix::transpose() const {
    Matrix r(F_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.data_[j * rows_ + i] = data_[i * cols_ + j];
    return r;
}

bool Matrix::equals(const Matrix& other) const {
    return F_.same(other.F_) && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

Matrix Matrix::frobenius(std::uint32_t s) const {
    Matrix r = *this;
    for (Fq& v : r.data_) v = F_.frobenius(v, s);
    return r;
}

void Matrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[i * cols_ + c], data_[j * cols_ + c]);
}

std::vector<Fq> Matrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void Matrix::set_row(std::size_t i, const std::vector<Fq>& r) {
    if (r.size() != cols_) throw params_mismatch("row length disagrees with matrix columns");
    for (std::size_t j = 0; j < cols_; ++j) set(i, j, r[j]);
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (!a.field().same(b.field())) throw params_mismatch("stacking matrices over different fields");
    if (a.cols() != b.cols()) throw params_mismatch("stacking matrices with different column counts");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) r.set_row(i, a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) r.set_row(a.rows() + i, b.row(i));
    return r;
}

Matrix parse_matrix(const Field& F, const std::string& text) {
    std::vector<std::vector<Fq>> rows;
    std::stringstream ss(text);
    std::string row_text;
    while (std::getline(ss, row_text, ';')) {
        std::vector<Fq> row;
        std::stringstream rs(row_text);
        std::string tok;
        while (std::getline(rs, tok, ',')) {
            const auto first = tok.find_first_not_of(" \t");
            if (first == std::string::npos) throw parse_error("empty matrix entry");
            const auto last = tok.find_last_not_of(" \t");
            tok = tok.substr(first, last - first + 1);
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &used);
            } catch (const std::exception&) {
                throw parse_error("invalid matrix entry '" + tok + "'");
            }
            if (used != tok.size()) throw parse_error("invalid matrix entry '" + tok + "'");
            if (v >= F.q()) throw parse_error("matrix entry " + tok + " out of range for field of order " +
                                              std::to_string(F.q()));
            row.push_back(static_cast<Fq>(v));
        }
        if (row.empty()) throw parse_error("empty matrix row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("empty matrix text");
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw parse_error("ragged matrix rows");
    Matrix a(F, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) a.set_row(i, rows[i]);
    return a;
}

std::string format_matrix(const Matrix& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) out += ';';
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out += ',';
            out += std::to_string(a.at(i, j));
        }
    }
    return out;
}

}  // namespace subsum
