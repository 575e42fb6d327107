#include "subsum/autsearch.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "subsum/errors.hpp"

namespace subsum {

bool degrees_separate_dimensions(const SumGraph& G) {
    const std::size_t n = G.ambient_dim();
    std::vector<std::size_t> dim_degree;
    for (std::size_t k = 1; k < n; ++k) {
        const auto [lo, hi] = G.dim_block(k);
        const std::size_t d = G.degree(lo);
        for (std::size_t id = lo + 1; id < hi; ++id)
            if (G.degree(id) != d) return false;
        dim_degree.push_back(d);
    }
    std::sort(dim_degree.begin(), dim_degree.end());
    return std::adjacent_find(dim_degree.begin(), dim_degree.end()) == dim_degree.end();
}

namespace {

// Equitable partition: start from degree classes, split classes by per-class
// neighbor counts until stable.  Color values are dense and deterministic
// (sorted by old color, then signature).
std::vector<std::size_t> equitable_colors(const SumGraph& G) {
    const std::size_t V = G.num_vertices();
    std::vector<std::size_t> color(V);
    {
        std::vector<std::size_t> degrees;
        for (std::size_t v = 0; v < V; ++v) degrees.push_back(G.degree(v));
        std::vector<std::size_t> sorted = degrees;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t v = 0; v < V; ++v)
            color[v] = static_cast<std::size_t>(
                std::lower_bound(sorted.begin(), sorted.end(), degrees[v]) - sorted.begin());
    }

    std::size_t num_colors = 1 + *std::max_element(color.begin(), color.end());
    while (true) {
        using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
        std::vector<Signature> sig(V);
        for (std::size_t v = 0; v < V; ++v) {
            std::vector<std::size_t> counts(num_colors, 0);
            for (std::size_t u = 0; u < V; ++u)
                if (u != v && G.adjacent(v, u)) ++counts[color[u]];
            sig[v] = {color[v], std::move(counts)};
        }
        std::map<Signature, std::size_t> rank;
        for (std::size_t v = 0; v < V; ++v) rank.emplace(sig[v], 0);
        std::size_t next = 0;
        for (auto& [key, r] : rank) r = next++;
        const bool stable = next == num_colors;
        for (std::size_t v = 0; v < V; ++v) color[v] = rank[sig[v]];
        num_colors = next;
        if (stable) break;
    }
    return color;
}

class Searcher {
public:
    Searcher(const SumGraph& G, std::uint64_t node_limit,
             const std::function<void(const std::vector<std::size_t>&)>& visit)
        : V_(G.num_vertices()), W_((V_ + 63) / 64), limit_(node_limit), visit_(visit) {
        adj_.assign(V_ * W_, 0);
        for (std::size_t v = 0; v < V_; ++v)
            for (std::size_t u = 0; u < V_; ++u)
                if (u != v && G.adjacent(v, u)) adj_[v * W_ + u / 64] |= std::uint64_t{1} << (u % 64);

        const std::vector<std::size_t> color = equitable_colors(G);
        cand_.assign((V_ + 1) * V_ * W_, 0);
        for (std::size_t v = 0; v < V_; ++v)
            for (std::size_t u = 0; u < V_; ++u)
                if (color[u] == color[v]) level(0)[v * W_ + u / 64] |= std::uint64_t{1} << (u % 64);

        image_.assign(V_, kUnmapped);
        preimage_used_.assign(W_, 0);
    }

    void run() { recurse(0); }

private:
    static constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

    std::uint64_t* level(std::size_t depth) { return cand_.data() + depth * V_ * W_; }

    std::size_t popcount_set(const std::uint64_t* set) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < W_; ++w) c += static_cast<std::size_t>(std::popcount(set[w]));
        return c;
    }

    bool leaf_is_automorphism() const {
        for (std::size_t a = 0; a < V_; ++a) {
            const std::uint64_t* row_a = adj_.data() + a * W_;
            const std::uint64_t* row_ia = adj_.data() + image_[a] * W_;
            for (std::size_t b = a + 1; b < V_; ++b) {
                const bool e = (row_a[b / 64] >> (b % 64)) & 1;
                const bool f = (row_ia[image_[b] / 64] >> (image_[b] % 64)) & 1;
                if (e != f) return false;
            }
        }
        return true;
    }

    void recurse(std::size_t depth) {
        if (depth == V_) {
            // The propagation rules make every completion adjacency-
            // preserving, but an oracle should not trust its own pruning:
            // re-check from the raw adjacency before emitting.
            if (!leaf_is_automorphism())
                throw std::logic_error("search produced a non-automorphism leaf");
            ++found_;
            visit_(image_);
            return;
        }

        // Fail-first: branch on the unmapped vertex with the fewest
        // candidates, smallest id breaking ties.
        std::size_t v = kUnmapped, best = kUnmapped;
        for (std::size_t u = 0; u < V_; ++u) {
            if (image_[u] != kUnmapped) continue;
            const std::size_t c = popcount_set(level(depth) + u * W_);
            if (c < best) {
                best = c;
                v = u;
            }
        }
        if (best == 0) return;

        const std::uint64_t* cand_v = level(depth) + v * W_;
        for (std::size_t w = 0; w < V_; ++w) {
            if (!((cand_v[w / 64] >> (w % 64)) & 1)) continue;
            if ((preimage_used_[w / 64] >> (w % 64)) & 1) continue;

            if (++nodes_ > limit_) throw search_limit_exceeded(found_, nodes_ - 1);

            // Tentatively map v -> w and narrow every other candidate set:
            // neighbors of v must map into neighbors of w, non-neighbors
            // into non-neighbors, and nothing else may map to w.
            bool dead = false;
            std::uint64_t* next = level(depth + 1);
            const std::uint64_t* row_v = adj_.data() + v * W_;
            const std::uint64_t* row_w = adj_.data() + w * W_;
            for (std::size_t u = 0; u < V_ && !dead; ++u) {
                if (image_[u] != kUnmapped || u == v) continue;
                std::uint64_t* cu = next + u * W_;
                const std::uint64_t* old = level(depth) + u * W_;
                const bool vu = (row_v[u / 64] >> (u % 64)) & 1;
                bool nonempty = false;
                for (std::size_t word = 0; word < W_; ++word) {
                    std::uint64_t bits = old[word] & (vu ? row_w[word] : ~row_w[word]);
                    if (word == w / 64) bits &= ~(std::uint64_t{1} << (w % 64));
                    cu[word] = bits;
                    nonempty |= bits != 0;
                }
                dead = !nonempty;
            }
            if (dead) continue;

            image_[v] = w;
            preimage_used_[w / 64] |= std::uint64_t{1} << (w % 64);
            recurse(depth + 1);
            preimage_used_[w / 64] &= ~(std::uint64_t{1} << (w % 64));
            image_[v] = kUnmapped;
        }
    }

    std::size_t V_, W_;
    std::uint64_t limit_;
    const std::function<void(const std::vector<std::size_t>&)>& visit_;

    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> cand_;
    std::vector<std::size_t> image_;
    std::vector<std::uint64_t> preimage_used_;
    std::uint64_t nodes_ = 0;
    std::uint64_t found_ = 0;
};

}  // namespace

void for_each_automorphism(const SumGraph& G, std::uint64_t node_limit,
                           const std::function<void(const std::vector<std::size_t>&)>& visit) {
    Searcher(G, node_limit, visit).run();
}

std::vector<VertexPermutation> enumerate_automorphisms(const SumGraph& G, std::uint64_t node_limit) {
    std::vector<std::vector<std::size_t>> images;
    for_each_automorphism(G, node_limit, [&](const std::vector<std::size_t>& im) { images.push_back(im); });
    std::sort(images.begin(), images.end());
    std::vector<VertexPermutation> out;
    out.reserve(images.size());
    for (auto& im : images) out.emplace_back(std::move(im));
    return out;
}

std::uint64_t count_automorphisms(const SumGraph& G, std::uint64_t node_limit) {
    std::uint64_t found = 0;
    for_each_automorphism(G, node_limit, [&](const std::vector<std::size_t>&) { ++found; });
    return found;
}

}  // namespace subsum
