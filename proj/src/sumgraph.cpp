#include "subsum/sumgraph.hpp"

#include <algorithm>

namespace subsum {

SumGraph SumGraph::build(const Field& F, std::size_t n, std::uint64_t vertex_cap) {
    if (n < 2)
        throw std::invalid_argument("vertex set is empty: a " + std::to_string(n) +
                                    "-dimensional space has no nontrivial proper subspace");

    BigInt expected = 0;
    for (std::size_t k = 1; k < n; ++k) expected += gaussian_binomial(n, k, F.q());
    if (expected > vertex_cap)
        throw size_cap_error("graph would have " + expected.str() + " vertices, cap is " +
                             std::to_string(vertex_cap));

    SumGraph G(F, n);
    G.block_start_.assign(n + 1, 0);
    for (std::size_t k = 1; k < n; ++k) {
        G.block_start_[k] = G.vertices_.size();
        auto block = all_subspaces(F, n, k);
        G.vertices_.insert(G.vertices_.end(), std::make_move_iterator(block.begin()),
                           std::make_move_iterator(block.end()));
    }
    G.block_start_[n] = G.vertices_.size();

    const std::size_t V = G.vertices_.size();
    G.words_per_row_ = (V + 63) / 64;
    G.adj_.assign(V * G.words_per_row_, 0);
    G.degree_.assign(V, 0);

    for (std::size_t a = 0; a < V; ++a) {
        const Subspace& Wa = G.vertices_[a];
        for (std::size_t b = a + 1; b < V; ++b) {
            const Subspace& Wb = G.vertices_[b];
            // dim(Wa + Wb) can reach n only if the dimensions add up to n.
            if (Wa.dim() + Wb.dim() < n) continue;
            if (Wa.sum_dim(Wb) != n) continue;
            G.adj_[G.word_index(a, b)] |= std::uint64_t{1} << (b % 64);
            G.adj_[G.word_index(b, a)] |= std::uint64_t{1} << (a % 64);
            ++G.degree_[a];
            ++G.degree_[b];
            ++G.num_edges_;
        }
    }

    G.complete_ = V >= 1 && G.num_edges_ == static_cast<std::uint64_t>(V) * (V - 1) / 2;
    return G;
}

const Subspace& SumGraph::vertex(std::size_t id) const {
    if (id >= vertices_.size()) throw std::out_of_range("vertex id out of range");
    return vertices_[id];
}

std::size_t SumGraph::vertex_id(const Subspace& W) const {
    if (!W.field().same(F_)) throw params_mismatch("subspace over a different field");
    if (W.ambient_dim() != n_) throw params_mismatch("subspace of a different ambient space");
    const auto [lo, hi] = dim_block(W.dim());
    const auto key = W.encoding();
    auto first = vertices_.begin() + static_cast<std::ptrdiff_t>(lo);
    auto last = vertices_.begin() + static_cast<std::ptrdiff_t>(hi);
    auto it = std::lower_bound(first, last, key,
                               [](const Subspace& v, const std::vector<Fq>& k) { return v.encoding() < k; });
    if (it == last || !(it->encoding() == key))
        throw std::invalid_argument("subspace is not a vertex of this graph");
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool SumGraph::adjacent(std::size_t a, std::size_t b) const {
    if (a >= vertices_.size() || b >= vertices_.size()) throw std::out_of_range("vertex id out of range");
    return (adj_[word_index(a, b)] >> (b % 64)) & 1;
}

std::size_t SumGraph::degree(std::size_t id) const {
    if (id >= vertices_.size()) throw std::out_of_range("vertex id out of range");
    return degree_[id];
}

std::pair<std::size_t, std::size_t> SumGraph::dim_block(std::size_t k) const {
    if (k < 1 || k >= n_) throw std::invalid_argument("dimension block out of range");
    return {block_start_[k], block_start_[k + 1]};
}

std::vector<std::pair<std::size_t, std::size_t>> SumGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(num_edges_);
    for (std::size_t a = 0; a < vertices_.size(); ++a)
        for (std::size_t b = a + 1; b < vertices_.size(); ++b)
            if (adjacent(a, b)) out.emplace_back(a, b);
    return out;
}

namespace {

BigInt power(std::uint64_t q, std::size_t e) {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= q;
    return r;
}

DegreeFormulaResult evaluate_terms(std::size_t n, std::size_t k, std::uint64_t q,
                                   bool corrected_denominator) {
    if (k < 1 || k + 1 > n) throw std::invalid_argument("vertex dimension must lie in [1, n-1]");
    DegreeFormulaResult res;
    res.total = 0;
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t d = n - k + r;
        BigInt num = 1;
        for (std::size_t t = 0; t < r; ++t) num *= power(q, k) - power(q, t);
        for (std::size_t t = k; t < n; ++t) num *= power(q, n) - power(q, t);
        BigInt den = 1;
        if (corrected_denominator) {
            for (std::size_t t = 0; t < r; ++t) den *= power(q, r) - power(q, t);
            for (std::size_t t = r; t < d; ++t) den *= power(q, d) - power(q, t);
        } else {
            for (std::size_t t = 0; t < d; ++t) den *= power(q, d) - power(q, t);
        }
        if (num % den != 0)
            throw formula_integrity_error("term r=" + std::to_string(r) + " at n=" + std::to_string(n) +
                                          ", k=" + std::to_string(k) + ", q=" + std::to_string(q) +
                                          " is not an integer: " + num.str() + "/" + den.str());
        res.terms.push_back(num / den);
        res.total += res.terms.back();
    }
    return res;
}

}  // namespace

DegreeFormulaResult degree_formula(std::size_t n, std::size_t k, std::uint64_t q) {
    return evaluate_terms(n, k, q, false);
}

DegreeFormulaResult degree_formula_corrected(std::size_t n, std::size_t k, std::uint64_t q) {
    return evaluate_terms(n, k, q, true);
}

std::string export_graph(const SumGraph& G, const std::string& format) {
    if (format == "edge-list") {
        std::string out;
        bool first = true;
        for (const auto& [a, b] : G.edges()) {
            if (!first) out += '\n';
            first = false;
            out += std::to_string(a + 1);
            out += '\t';
            out += std::to_string(b + 1);
        }
        return out;
    }
    if (format == "dot") {
        std::string out = "graph subsum {";
        for (std::size_t id = 0; id < G.num_vertices(); ++id) {
            const Subspace& W = G.vertex(id);
            out += "\n  " + std::to_string(id + 1) + " [label=\"" + std::to_string(W.dim()) + ":" +
                   format_matrix(W.basis()) + "\"];";
        }
        for (const auto& [a, b] : G.edges())
            out += "\n  " + std::to_string(a + 1) + " -- " + std::to_string(b + 1) + ";";
        out += "\n}";
        return out;
    }
    throw std::invalid_argument("unknown export format '" + format + "' (expected edge-list or dot)");
}

std::string export_vertex_table(const SumGraph& G) {
    std::string out = "id\tdim\tbasis";
    for (std::size_t id = 0; id < G.num_vertices(); ++id) {
        const Subspace& W = G.vertex(id);
        out += '\n' + std::to_string(id + 1) + '\t' + std::to_string(W.dim()) + '\t' +
               format_matrix(W.basis());
    }
    return out;
}

}  // namespace subsum
