#include "subsum/semilinear.hpp"

namespace subsum {

namespace {

Matrix canonicalize(Matrix A) {
    const Field& F = A.field();
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const Fq v = A.at(i, j);
            if (v == 0) continue;
            if (v == 1) return A;
            const Fq c = F.inv(v);
            Matrix scaled(F, A.rows(), A.cols());
            for (std::size_t r = 0; r < A.rows(); ++r)
                for (std::size_t s = 0; s < A.cols(); ++s) scaled.set(r, s, F.mul(c, A.at(r, s)));
            return scaled;
        }
    return A;  // unreachable for invertible input
}

}  // namespace

SemilinearAuto SemilinearAuto::make(const Matrix& A, std::uint32_t s) {
    if (A.rows() != A.cols()) throw std::invalid_argument("semilinear map needs a square matrix");
    if (s >= A.field().m())
        throw std::invalid_argument("Frobenius exponent " + std::to_string(s) + " out of range [0, " +
                                    std::to_string(A.field().m()) + ")");
    if (!A.invertible()) throw singular_matrix("semilinear map needs an invertible matrix");
    return SemilinearAuto(canonicalize(A), s);
}

SemilinearAuto SemilinearAuto::identity(const Field& F, std::size_t n) {
    return SemilinearAuto(Matrix::identity(F, n), 0);
}

std::vector<Fq> SemilinearAuto::apply_to_vector(const std::vector<Fq>& v) const {
    if (v.size() != ambient_dim()) throw params_mismatch("vector length disagrees with map dimension");
    const Field& F = field();
    std::vector<Fq> out(v.size(), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] = F.add(out[i], F.mul(A_.at(i, j), F.frobenius(v[j], s_)));
    return out;
}

Subspace SemilinearAuto::apply(const Subspace& W) const {
    if (!W.field().same(field())) throw params_mismatch("subspace over a different field");
    if (W.ambient_dim() != ambient_dim()) throw params_mismatch("subspace of a different ambient space");
    Matrix images(field(), W.dim(), W.ambient_dim());
    for (std::size_t i = 0; i < W.dim(); ++i) images.set_row(i, apply_to_vector(W.basis().row(i)));
    return Subspace::span(images);
}

SemilinearAuto SemilinearAuto::compose(const SemilinearAuto& other) const {
    if (!field().same(other.field()) || ambient_dim() != other.ambient_dim())
        throw params_mismatch("composing maps over different spaces");
    const std::uint32_t m = field().m();
    return make(A_.mul(other.A_.frobenius(s_)), (s_ + other.s_) % m);
}

SemilinearAuto SemilinearAuto::inverse() const {
    const std::uint32_t m = field().m();
    const std::uint32_t t = (m - s_) % m;
    return make(A_.inverse().frobenius(t), t);
}

bool SemilinearAuto::equals(const SemilinearAuto& other) const {
    return s_ == other.s_ && A_.equals(other.A_);
}

VertexPermutation as_vertex_permutation(const SemilinearAuto& g, const SumGraph& G) {
    if (!g.field().same(G.field()) || g.ambient_dim() != G.ambient_dim())
        throw params_mismatch("map and graph live over different spaces");
    std::vector<std::size_t> image(G.num_vertices());
    for (std::size_t id = 0; id < G.num_vertices(); ++id) image[id] = G.vertex_id(g.apply(G.vertex(id)));
    return VertexPermutation(std::move(image));
}

GroupOrder group_order(std::size_t n, const Field& F) {
    if (n < 3) throw std::invalid_argument("automorphism group order requires n >= 3");
    BigInt qn = 1;
    const BigInt Q = F.q();
    for (std::size_t i = 0; i < n; ++i) qn *= Q;
    BigInt num = 1, qi = 1;
    for (std::size_t i = 0; i < n; ++i) {
        num *= qn - qi;
        qi *= Q;
    }
    const BigInt den = Q - 1;
    if (num % den != 0) throw std::logic_error("group order division not exact");
    GroupOrder g;
    g.pgl = num / den;
    g.total = g.pgl * F.m();
    return g;
}

Matrix random_invertible(const Field& F, std::size_t n, SplitMix64& rng) {
    // Rejection: the invertible fraction prod(1 - q^-i) is at least ~0.288,
    // so a handful of draws suffice.
    while (true) {
        Matrix A(F, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A.set(i, j, static_cast<Fq>(rng.below(F.q())));
        if (A.invertible()) return A;
    }
}

SemilinearAuto random_auto(const Field& F, std::size_t n, SplitMix64& rng) {
    Matrix A = random_invertible(F, n, rng);
    const auto s = static_cast<std::uint32_t>(rng.below(F.m()));
    return SemilinearAuto::make(A, s);
}

std::string format_auto(const SemilinearAuto& g) {
    return "A=" + format_matrix(g.matrix()) + ";s=" + std::to_string(g.frob_exponent());
}

SemilinearAuto parse_auto(const Field& F, const std::string& text) {
    if (text.rfind("A=", 0) != 0) throw parse_error("automorphism text must start with 'A='");
    const auto split = text.rfind(";s=");
    if (split == std::string::npos) throw parse_error("automorphism text must end with ';s=<integer>'");
    const std::string matrix_text = text.substr(2, split - 2);
    const std::string s_text = text.substr(split + 3);
    std::size_t used = 0;
    unsigned long s = 0;
    try {
        s = std::stoul(s_text, &used);
    } catch (const std::exception&) {
        throw parse_error("invalid Frobenius exponent '" + s_text + "'");
    }
    if (used != s_text.size()) throw parse_error("invalid Frobenius exponent '" + s_text + "'");
    Matrix A = parse_matrix(F, matrix_text);
    try {
        return SemilinearAuto::make(A, static_cast<std::uint32_t>(s));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    } catch (const singular_matrix& e) {
        throw parse_error(e.what());
    }
}

}  // namespace subsum
