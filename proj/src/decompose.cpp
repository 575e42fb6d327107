#include "subsum/decompose.hpp"

namespace subsum {

TransitionTable::TransitionTable(const Field& F, std::size_t n)
    : F_(F), n_(n), maps_(n * n) {
    if (n < 3) throw std::invalid_argument("transition tables need n >= 3");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) maps_[i * n + j].assign(F.q(), 0);
}

const std::vector<Fq>& TransitionTable::at(std::size_t i, std::size_t j) const {
    if (i >= j || j >= n_) throw std::invalid_argument("transition index must satisfy i < j < n");
    return maps_[i * n_ + j];
}

std::vector<Fq>& TransitionTable::at(std::size_t i, std::size_t j) {
    if (i >= j || j >= n_) throw std::invalid_argument("transition index must satisfy i < j < n");
    return maps_[i * n_ + j];
}

bool check_automorphism(const SumGraph& G, const VertexPermutation& sigma) {
    if (sigma.size() != G.num_vertices()) throw params_mismatch("permutation size disagrees with graph");
    const std::size_t V = G.num_vertices();
    for (std::size_t a = 0; a < V; ++a)
        for (std::size_t b = a + 1; b < V; ++b)
            if (G.adjacent(a, b) != G.adjacent(sigma(a), sigma(b))) return false;
    return true;
}

namespace {

std::vector<Fq> unit_vector(std::size_t n, std::size_t i) {
    std::vector<Fq> v(n, 0);
    v[i] = 1;
    return v;
}

// The image of vertex `id` under sigma, which must be a line; returns its
// normalized spanning vector.
std::vector<Fq> image_line(const SumGraph& G, const VertexPermutation& sigma, std::size_t id,
                           const char* context) {
    const Subspace& W = G.vertex(sigma(id));
    if (W.dim() != 1) throw std::logic_error(std::string(context) + ": image of a line is not a line");
    return W.basis().row(0);
}

}  // namespace

std::pair<Matrix, VertexPermutation> normalize_basis(const SumGraph& G, const VertexPermutation& sigma) {
    const Field& F = G.field();
    const std::size_t n = G.ambient_dim();
    if (sigma.size() != G.num_vertices()) throw params_mismatch("permutation size disagrees with graph");

    Matrix B = Matrix::identity(F, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t line_id = G.vertex_id(Subspace::line(F, unit_vector(n, i)));
        const std::vector<Fq> gamma = image_line(G, sigma, line_id, "normalize_basis");
        const std::vector<Fq> c = mat_vec(B, gamma);

        // Smallest pivot t >= i with c_t != 0; absence would mean the images
        // of <e_1>..<e_i> plus this line are linearly dependent, impossible
        // for an automorphism.
        std::size_t t = i;
        while (t < n && c[t] == 0) ++t;
        if (t == n) throw std::logic_error("normalize_basis: no pivot at or after current axis");

        // Step matrix sends c to a multiple of e_t, then the row swap moves
        // it to e_i; entries below i stay fixed because they are never used
        // as the pivot column.
        Matrix Bi = Matrix::identity(F, n);
        const Fq ct_inv = F.inv(c[t]);
        for (std::size_t j = 0; j < n; ++j)
            if (j != t && c[j] != 0) Bi.set(j, t, F.neg(F.mul(c[j], ct_inv)));
        Bi.swap_rows(i, t);
        B = Bi.mul(B);
    }

    const VertexPermutation perm_B = as_vertex_permutation(SemilinearAuto::make(B, 0), G);
    return {B, perm_B.compose(sigma)};
}

TransitionTable extract_transitions(const SumGraph& G, const VertexPermutation& sigma1) {
    const Field& F = G.field();
    const std::size_t n = G.ambient_dim();
    if (sigma1.size() != G.num_vertices()) throw params_mismatch("permutation size disagrees with graph");

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t id = G.vertex_id(Subspace::line(F, unit_vector(n, i)));
        if (sigma1(id) != id)
            throw transition_error("coordinate line " + std::to_string(i + 1) + " is not fixed");
    }

    TransitionTable T(F, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Fq>& f = T.at(i, j);
            f[0] = 0;  // <e_i> is fixed, checked above
            for (Fq a = 1; a < F.q(); ++a) {
                std::vector<Fq> v(n, 0);
                v[i] = 1;
                v[j] = a;
                const std::size_t id = G.vertex_id(Subspace::line(F, v));
                const Subspace& img = G.vertex(sigma1(id));
                if (img.dim() != 1)
                    throw transition_error("image of a coordinate-pair line has dimension " +
                                           std::to_string(img.dim()));
                const std::vector<Fq> u = img.basis().row(0);
                for (std::size_t r = 0; r < n; ++r) {
                    const bool allowed = r == i || r == j;
                    if (!allowed && u[r] != 0)
                        throw transition_error("image line leaves the coordinate-pair plane");
                }
                // Zero coordinates must map to zero coordinates and back, so
                // the image reads <e_i + b e_j> with b nonzero.
                if (u[i] != 1 || u[j] == 0)
                    throw transition_error("image line breaks the zero pattern of its source");
                f[a] = u[j];
            }
        }
    return T;
}

std::pair<std::uint32_t, Matrix> solve_field_auto(const TransitionTable& T) {
    const Field& F = T.field();
    const std::size_t n = T.dim();
    const Fq q = static_cast<Fq>(F.q());

    // Product rule linking every pair map back to the first-row maps.
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (Fq a = 0; a < q; ++a)
                for (Fq b = 0; b < q; ++b)
                    if (T.at(0, j)[F.mul(a, b)] != F.mul(T.at(0, i)[a], T.at(i, j)[b]))
                        throw transition_error("transition maps violate the product rule at i=" +
                                               std::to_string(i + 1) + ", j=" + std::to_string(j + 1));

    // Normalized first map; the scale factors move into D.
    const std::vector<Fq>& f01 = T.at(0, 1);
    const Fq unit = f01[1];
    if (unit == 0) throw transition_error("transition map sends 1 to 0");
    const Fq unit_inv = F.inv(unit);
    std::vector<Fq> f(q);
    for (Fq a = 0; a < q; ++a) f[a] = F.mul(f01[a], unit_inv);

    for (Fq a = 0; a < q; ++a)
        for (Fq b = 0; b < q; ++b) {
            if (f[F.add(a, b)] != F.add(f[a], f[b]))
                throw not_an_automorphism("normalized transition map is not additive");
            if (f[F.mul(a, b)] != F.mul(f[a], f[b]))
                throw not_an_automorphism("normalized transition map is not multiplicative");
        }

    const std::uint32_t s = F.identify_automorphism(f);

    Matrix D(F, n, n);
    D.set(0, 0, 1);
    for (std::size_t j = 1; j < n; ++j) {
        const Fq fj1 = T.at(0, j)[1];
        if (fj1 == 0) throw transition_error("transition map sends 1 to 0");
        D.set(j, j, F.inv(fj1));
    }
    return {s, D};
}

DecompositionCertificate decompose(const SumGraph& G, const VertexPermutation& sigma) {
    if (G.ambient_dim() < 3)
        throw std::invalid_argument("decomposition requires n >= 3 (below that the graph is complete "
                                    "and has non-semilinear automorphisms)");
    if (sigma.size() != G.num_vertices()) throw params_mismatch("permutation size disagrees with graph");

    DecompositionCertificate cert;

    if (!check_automorphism(G, sigma)) {
        cert.rejection_stage = stage::check_automorphism;
        return cert;
    }

    auto [B, sigma1] = normalize_basis(G, sigma);
    cert.B = B;

    std::optional<TransitionTable> T;
    try {
        T = extract_transitions(G, sigma1);
    } catch (const transition_error&) {
        cert.rejection_stage = stage::transition_extraction;
        return cert;
    }

    std::uint32_t s = 0;
    std::optional<Matrix> D;
    try {
        auto solved = solve_field_auto(*T);
        s = solved.first;
        D = std::move(solved.second);
    } catch (const transition_error&) {
        cert.rejection_stage = stage::transition_consistency;
        return cert;
    } catch (const not_an_automorphism&) {
        cert.rejection_stage = stage::field_automorphism;
        return cert;
    }
    cert.D = D;

    const Matrix A = B.inverse().mul(D->inverse());
    cert.map = SemilinearAuto::make(A, s);

    const VertexPermutation induced = as_vertex_permutation(*cert.map, G);
    if (induced == sigma) {
        cert.verified = true;
    } else {
        cert.rejection_stage = stage::final_verification;
    }
    return cert;
}

}  // namespace subsum
