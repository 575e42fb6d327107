#pragma once

// Subspaces of F_q^n in canonical form.  Every Subspace stores the unique
// reduced-row-echelon basis of its span, so equal subspaces compare equal
// entrywise and the encoding() tuple gives a total order within a dimension.

#include <cstdint>
#include <vector>

#include "subsum/bigint.hpp"
#include "subsum/linalg.hpp"

namespace subsum {

class Subspace {
public:
    // Canonicalizes the row span of `generators`.  The span must be a
    // nontrivial proper subspace: a zero span is invalid input, and a span
    // equal to the whole ambient space raises full_space_error (it is not a
    // graph vertex).
    static Subspace span(const Matrix& generators);

    // One-dimensional span of a nonzero vector.
    static Subspace line(const Field& F, const std::vector<Fq>& v);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }

    // dim(this + other); n means the two subspaces span the whole space.
    std::size_t sum_dim(const Subspace& other) const;

    bool contains(const std::vector<Fq>& v) const;
    bool is_subspace_of(const Subspace& other) const;
    bool equals(const Subspace& other) const;

    // Row-major flattening of the canonical basis; subspaces of equal
    // dimension are ordered lexicographically by this tuple.
    std::vector<Fq> encoding() const;

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_;
};

// All k-dimensional subspaces of F_q^n for 1 <= k <= n-1, sorted by
// encoding().
std::vector<Subspace> all_subspaces(const Field& F, std::size_t n, std::size_t k);

// Number of k-dimensional subspaces of an n-dimensional space over F_q,
// computed exactly.
BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

}  // namespace subsum
