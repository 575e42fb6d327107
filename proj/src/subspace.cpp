#include "subsum/subspace.hpp"

#include <algorithm>

namespace subsum {

Subspace Subspace::span(const Matrix& generators) {
    Matrix b = generators;
    const std::size_t r = b.rref();
    if (r == 0) throw std::invalid_argument("zero span has no canonical basis here");
    if (r == b.cols()) throw full_space_error("span is the whole ambient space, not a proper subspace");
    if (r == b.rows()) return Subspace(std::move(b));
    Matrix trimmed(b.field(), r, b.cols());
    for (std::size_t i = 0; i < r; ++i) trimmed.set_row(i, b.row(i));
    return Subspace(std::move(trimmed));
}

Subspace Subspace::line(const Field& F, const std::vector<Fq>& v) {
    Matrix g(F, 1, v.size());
    g.set_row(0, v);
    return span(g);
}

std::size_t Subspace::sum_dim(const Subspace& other) const {
    if (!field().same(other.field())) throw params_mismatch("subspaces over different fields");
    if (ambient_dim() != other.ambient_dim()) throw params_mismatch("subspaces of different ambient spaces");
    return vstack(basis_, other.basis_).rank();
}

bool Subspace::contains(const std::vector<Fq>& v) const {
    if (v.size() != ambient_dim()) throw params_mismatch("vector length disagrees with ambient dimension");
    // Reduce v against the RREF basis; membership iff the residue vanishes.
    const Field& F = field();
    std::vector<Fq> r = v;
    for (std::size_t i = 0; i < dim(); ++i) {
        std::size_t pivot = 0;
        while (basis_.at(i, pivot) == 0) ++pivot;
        const Fq c = r[pivot];
        if (c == 0) continue;
        for (std::size_t j = pivot; j < r.size(); ++j) r[j] = F.sub(r[j], F.mul(c, basis_.at(i, j)));
    }
    return std::all_of(r.begin(), r.end(), [](Fq x) { return x == 0; });
}

bool Subspace::is_subspace_of(const Subspace& other) const {
    // W1 <= W2 iff adding W1's basis to W2 does not grow the span.
    return sum_dim(other) == other.dim();
}

bool Subspace::equals(const Subspace& other) const { return basis_.equals(other.basis_); }

std::vector<Fq> Subspace::encoding() const {
    std::vector<Fq> e;
    e.reserve(dim() * ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_dim(); ++j) e.push_back(basis_.at(i, j));
    return e;
}

namespace {

// Advance a k-subset of {0..n-1} held in increasing order; false at the end.
bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    const std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] + (k - i) < n) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<Subspace> all_subspaces(const Field& F, std::size_t n, std::size_t k) {
    if (k < 1 || k + 1 > n) throw std::invalid_argument("subspace dimension must lie in [1, n-1]");
    std::vector<Subspace> out;
    const std::uint64_t q = F.q();

    // Every k-dimensional subspace has a unique RREF basis, determined by its
    // pivot columns plus the values of the free entries; walk both choices.
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    do {
        // Free slots: (i, j) with j right of row i's pivot and j not a pivot.
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = piv[i] + 1; j < n; ++j)
                if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_slots.emplace_back(i, j);

        std::vector<Fq> fill(free_slots.size(), 0);
        bool more = true;
        while (more) {
            Matrix b(F, k, n);
            for (std::size_t i = 0; i < k; ++i) b.set(i, piv[i], 1);
            for (std::size_t t = 0; t < free_slots.size(); ++t)
                b.set(free_slots[t].first, free_slots[t].second, fill[t]);
            out.push_back(Subspace::span(b));
            // Odometer over F_q^free.
            std::size_t t = 0;
            while (t < fill.size() && fill[t] + 1 == q) fill[t++] = 0;
            if (t == fill.size())
                more = false;
            else
                ++fill[t];
        }
    } while (next_subset(piv, n));

    std::sort(out.begin(), out.end(),
              [](const Subspace& a, const Subspace& b) { return a.encoding() < b.encoding(); });
    return out;
}

BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
    if (k > n) return 0;
    BigInt num = 1, den = 1;
    const BigInt Q = q;
    BigInt qn = 1, qk = 1;
    for (std::size_t i = 0; i < n; ++i) qn *= Q;
    for (std::size_t i = 0; i < k; ++i) qk *= Q;
    BigInt qi = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= qn - qi;
        den *= qk - qi;
        qi *= Q;
    }
    return num / den;  // exact: both count ordered k-tuples of independent vectors
}

}  // namespace subsum
