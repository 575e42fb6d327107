#pragma once

// Constructive factorization of graph automorphisms.  Any adjacency-
// preserving bijection of the subspace sum graph (n >= 3) is the action of a
// semilinear map, and the pipeline below finds it:
//
//   1. check_automorphism  - adjacency preservation over all vertex pairs
//   2. normalize_basis     - build B with sigma_B .. sigma fixing every <e_i>
//   3. extract_transitions - read f_ij from images of the lines <e_i + a e_j>
//   4. solve_field_auto    - prove f_ij = (Frobenius power) * scalar, build D
//   5. assemble            - A = B^-1 D^-1, then verify (A, s) reproduces the
//                            input on EVERY vertex before marking it verified
//
// Rejections carry the name of the failing stage so near-automorphism inputs
// are debuggable.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subsum/permutation.hpp"
#include "subsum/semilinear.hpp"
#include "subsum/sumgraph.hpp"

namespace subsum {

namespace stage {
inline constexpr const char* check_automorphism = "check_automorphism";
inline constexpr const char* transition_extraction = "transition_extraction";
inline constexpr const char* transition_consistency = "transition_consistency";
inline constexpr const char* field_automorphism = "field_automorphism";
inline constexpr const char* final_verification = "final_verification";
}  // namespace stage

// f_ij : F_q -> F_q for each coordinate pair i < j, read off the images of
// the lines <e_i + a e_j>.  f_ij(0) = 0 and nonzero values stay nonzero.
class TransitionTable {
public:
    TransitionTable(const Field& F, std::size_t n);

    const Field& field() const noexcept { return F_; }
    std::size_t dim() const noexcept { return n_; }

    const std::vector<Fq>& at(std::size_t i, std::size_t j) const;  // requires i < j < n
    std::vector<Fq>& at(std::size_t i, std::size_t j);

private:
    Field F_;
    std::size_t n_;
    std::vector<std::vector<Fq>> maps_;  // dense (i, j) grid, only i < j used
};

struct DecompositionCertificate {
    bool verified = false;
    std::string rejection_stage;        // empty when verified
    std::optional<SemilinearAuto> map;  // candidate (A, s); trustworthy only if verified
    std::optional<Matrix> B;            // audit trail of the normalization
    std::optional<Matrix> D;
};

// True iff sigma preserves adjacency and non-adjacency over all pairs.
bool check_automorphism(const SumGraph& G, const VertexPermutation& sigma);

// Invertible B such that sigma_B after sigma fixes every coordinate line
// <e_i>; also returns that composite.  Requires sigma to have passed
// check_automorphism (violations surface as logic_error, not rejection).
std::pair<Matrix, VertexPermutation> normalize_basis(const SumGraph& G, const VertexPermutation& sigma);

// Reads every f_ij.  Throws transition_error when an image line is not of
// the required <e_i + b e_j> shape or a zero pattern is broken.
TransitionTable extract_transitions(const SumGraph& G, const VertexPermutation& sigma1);

// Checks the product rule f_0j(ab) = f_0i(a) f_ij(b) (transition_error on
// failure), then that the normalized f_01 is additive, multiplicative, and a
// Frobenius power (not_an_automorphism on failure).  Returns the exponent s
// and D = diag(1, f_01(1)^-1, ..., f_0,n-1(1)^-1).
std::pair<std::uint32_t, Matrix> solve_field_auto(const TransitionTable& T);

// Full pipeline.  Throws invalid_argument for n < 3 (the factorization does
// not exist in general on a complete graph); otherwise always returns a
// certificate, rejected ones naming their stage.
DecompositionCertificate decompose(const SumGraph& G, const VertexPermutation& sigma);

}  // namespace subsum
