#pragma once

// Semilinear maps W -> {A * frob_s(w) : w in W}: an invertible linear map
// composed with a coordinatewise field automorphism, the field map acting
// first.  The matrix is stored as a canonical projective representative
// (first nonzero entry in row-major scan scaled to 1) because scalar
// multiples act identically on subspaces.

#include <cstdint>
#include <string>

#include "subsum/bigint.hpp"
#include "subsum/linalg.hpp"
#include "subsum/permutation.hpp"
#include "subsum/rng.hpp"
#include "subsum/subspace.hpp"
#include "subsum/sumgraph.hpp"

namespace subsum {

class SemilinearAuto {
public:
    // Canonicalizes A; requires A square invertible and 0 <= s < m.
    static SemilinearAuto make(const Matrix& A, std::uint32_t s);
    static SemilinearAuto identity(const Field& F, std::size_t n);

    const Field& field() const noexcept { return A_.field(); }
    std::size_t ambient_dim() const noexcept { return A_.rows(); }
    const Matrix& matrix() const noexcept { return A_; }
    std::uint32_t frob_exponent() const noexcept { return s_; }

    // Row vector image: A * frob_s(v) with v treated as a column.
    std::vector<Fq> apply_to_vector(const std::vector<Fq>& v) const;
    Subspace apply(const Subspace& W) const;

    // Acts as *this after other; the Frobenius twist moves through the
    // matrix: (A1,s1)(A2,s2) = (A1 * frob_s1(A2), s1+s2 mod m).
    SemilinearAuto compose(const SemilinearAuto& other) const;
    SemilinearAuto inverse() const;

    bool equals(const SemilinearAuto& other) const;

private:
    SemilinearAuto(Matrix A, std::uint32_t s) : A_(std::move(A)), s_(s) {}
    Matrix A_;
    std::uint32_t s_;
};

// Image of every vertex id under the map's action; the result is always a
// graph automorphism.
VertexPermutation as_vertex_permutation(const SemilinearAuto& g, const SumGraph& G);

// |PGL_n(F_q)| and the full automorphism-group order |PGL_n(F_q)| * m,
// computed exactly.  Requires n >= 3 (below that the graph's automorphism
// group is not of this shape).
struct GroupOrder {
    BigInt pgl;
    BigInt total;
};
GroupOrder group_order(std::size_t n, const Field& F);

// Uniformly random invertible matrix / semilinear map, by rejection.
Matrix random_invertible(const Field& F, std::size_t n, SplitMix64& rng);
SemilinearAuto random_auto(const Field& F, std::size_t n, SplitMix64& rng);

// Text form "A=<matrix text>;s=<integer>".
std::string format_auto(const SemilinearAuto& g);
SemilinearAuto parse_auto(const Field& F, const std::string& text);

}  // namespace subsum
