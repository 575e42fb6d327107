#pragma once

// The subspace sum graph of F_q^n: vertices are all nontrivial proper
// subspaces in canonical order (dimension-major, then lexicographic basis
// encoding), and two vertices are adjacent exactly when their subspace sum is
// the whole space.  Adjacency is precomputed into a packed bitset because the
// automorphism search probes it millions of times.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "subsum/bigint.hpp"
#include "subsum/subspace.hpp"

namespace subsum {

inline constexpr std::uint64_t kDefaultVertexCap = 20000;

class SumGraph {
public:
    // Requires n >= 2 (n = 1 has an empty vertex set).  For n = 2 the graph
    // is complete and complete_graph() reports it; the structural results
    // about automorphisms need n >= 3.
    static SumGraph build(const Field& F, std::size_t n, std::uint64_t vertex_cap = kDefaultVertexCap);

    const Field& field() const noexcept { return F_; }
    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    std::uint64_t num_edges() const noexcept { return num_edges_; }
    bool complete_graph() const noexcept { return complete_; }

    const Subspace& vertex(std::size_t id) const;  // ids are 0-based internally
    std::size_t vertex_id(const Subspace& W) const;

    bool adjacent(std::size_t a, std::size_t b) const;
    std::size_t degree(std::size_t id) const;

    // Half-open id range [first, last) of the dimension-k block.
    std::pair<std::size_t, std::size_t> dim_block(std::size_t k) const;
    std::size_t vertex_dim(std::size_t id) const { return vertex(id).dim(); }

    // All edges as 0-based id pairs (a < b), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

private:
    SumGraph(Field F, std::size_t n) : F_(std::move(F)), n_(n) {}

    std::size_t word_index(std::size_t a, std::size_t b) const {
        return a * words_per_row_ + b / 64;
    }

    Field F_;
    std::size_t n_;
    std::vector<Subspace> vertices_;
    std::vector<std::size_t> block_start_;  // block_start_[k] = first id of dim k; size n_+1
    std::vector<std::uint64_t> adj_;        // row-major packed adjacency
    std::size_t words_per_row_ = 0;
    std::vector<std::size_t> degree_;
    std::uint64_t num_edges_ = 0;
    bool complete_ = false;
};

// Closed-form degree of a k-dimensional vertex, transcribed term by term from
// the source formula: total = sum over r < k of
//   N_r = prod_{t<r}(q^k - q^t) * prod_{k<=t<n}(q^n - q^t) / prod_{t<d}(q^d - q^t),
// with d = n - k + r.  Every division is checked exact; a nonzero remainder
// raises formula_integrity_error rather than truncating.  Known to disagree
// with direct counts for r >= 1 (see degree_formula_corrected).
struct DegreeFormulaResult {
    BigInt total;
    std::vector<BigInt> terms;
};
DegreeFormulaResult degree_formula(std::size_t n, std::size_t k, std::uint64_t q);

// Variant with the denominator prod_{t<r}(q^r - q^t) * prod_{r<=t<d}(q^d - q^t):
// counts, for each r, the (n-k+r)-dimensional complements meeting W in an
// r-dimensional subspace, and matches direct degree counts.  Not the
// published form.
DegreeFormulaResult degree_formula_corrected(std::size_t n, std::size_t k, std::uint64_t q);

// Edge list ("id1<TAB>id2" per line, 1-based, id1 < id2, sorted) or DOT with
// vertex labels "dim:basis".  No trailing newline.
std::string export_graph(const SumGraph& G, const std::string& format);

// Vertex table TSV: header "id\tdim\tbasis", one row per vertex, 1-based ids
// in canonical order.  No trailing newline.
std::string export_vertex_table(const SumGraph& G);

}  // namespace subsum
