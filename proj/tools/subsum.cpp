// Command-line surface for the subspace sum graph toolkit: graph exports,
// degree tables, automorphism counting, decomposition, and seeded random
// automorphisms.  All outputs are deterministic for a fixed seed.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "subsum/autsearch.hpp"
#include "subsum/decompose.hpp"
#include "subsum/io.hpp"
#include "subsum/rng.hpp"
#include "subsum/semilinear.hpp"
#include "subsum/sumgraph.hpp"

namespace {

using namespace subsum;

struct Params {
    std::size_t n = 0;
    std::uint32_t p = 0;
    std::uint32_t m = 1;
};

void add_params(CLI::App* cmd, Params& prm) {
    cmd->add_option("--n", prm.n, "ambient dimension")->required();
    cmd->add_option("--p", prm.p, "field characteristic (prime)")->required();
    cmd->add_option("--m", prm.m, "extension degree (q = p^m)")->capture_default_str();
}

// SUBSUM_CAP, when set, replaces both the field-order cap and the
// vertex-count cap.
std::pair<std::uint64_t, std::uint64_t> caps() {
    std::uint64_t q_cap = kDefaultFieldCap, v_cap = kDefaultVertexCap;
    if (const char* env = std::getenv("SUBSUM_CAP")) {
        const std::string text = env;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(text, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("SUBSUM_CAP is not an integer: '" + text + "'");
        }
        if (used != text.size() || v == 0)
            throw std::invalid_argument("SUBSUM_CAP is not a positive integer: '" + text + "'");
        q_cap = v_cap = v;
    }
    return {q_cap, v_cap};
}

Field make_field(const Params& prm) {
    return Field::make(prm.p, prm.m, caps().first);
}

SumGraph make_graph(const Params& prm, const Field& F) {
    SumGraph G = SumGraph::build(F, prm.n, caps().second);
    if (G.complete_graph() && prm.n == 2)
        std::cerr << "warning: n = 2 yields a complete graph; the automorphism structure theorem needs n >= 3\n";
    return G;
}

std::string default_prefix(const Params& prm) {
    return "subsum-n" + std::to_string(prm.n) + "-p" + std::to_string(prm.p) + "-m" +
           std::to_string(prm.m);
}

int cmd_build(const Params& prm, const std::string& format, std::string prefix) {
    const Field F = make_field(prm);
    const SumGraph G = make_graph(prm, F);
    if (prefix.empty()) prefix = default_prefix(prm);

    const std::string vertex_path = prefix + ".vertices.tsv";
    write_text_file(vertex_path, export_vertex_table(G));

    const std::string graph_path = prefix + (format == "dot" ? ".dot" : ".edges.tsv");
    write_text_file(graph_path, export_graph(G, format));

    std::cout << "wrote " << vertex_path << " (" << G.num_vertices() << " vertices) and " << graph_path
              << " (" << G.num_edges() << " edges)\n";
    return 0;
}

int cmd_degrees(const Params& prm) {
    const Field F = make_field(prm);
    const SumGraph G = make_graph(prm, F);

    std::cout << "k\tcount\tdegree_direct\tdegree_formula\tmatch\n";
    for (std::size_t k = 1; k < prm.n; ++k) {
        const auto [lo, hi] = G.dim_block(k);
        const std::size_t direct = G.degree(lo);
        std::string formula_text, match_text;
        try {
            const BigInt total = degree_formula(prm.n, k, F.q()).total;
            formula_text = total.str();
            match_text = total == direct ? "match" : "MISMATCH";
        } catch (const formula_integrity_error&) {
            formula_text = "non-integral";
            match_text = "MISMATCH";
        }
        std::cout << k << '\t' << (hi - lo) << '\t' << direct << '\t' << formula_text << '\t'
                  << match_text << '\n';
    }
    return 0;
}

int cmd_aut_count(const Params& prm, std::uint64_t limit) {
    const Field F = make_field(prm);
    const SumGraph G = make_graph(prm, F);
    std::cout << count_automorphisms(G, limit) << '\n';
    return 0;
}

int cmd_verify_theorem(const Params& prm, std::uint64_t limit, std::uint64_t seed) {
    if (prm.n < 3) {
        std::cerr << "error: theorem requires n >= 3\n";
        return 1;
    }
    const Field F = make_field(prm);
    const SumGraph G = make_graph(prm, F);

    const BigInt closed_form = group_order(prm.n, F).total;
    const auto autos = enumerate_automorphisms(G, limit);
    const BigInt brute = autos.size();

    std::string report = "brute " + brute.str() +
                         (brute == closed_form ? " == " : " != ") + "closed-form " + closed_form.str();
    bool pass = brute == closed_form;

    // Decompose every automorphism, or a seeded sample when the group is
    // large.
    constexpr std::size_t kSampleThreshold = 20000, kSampleSize = 1000;
    std::vector<std::size_t> picks;
    const bool sampled = autos.size() > kSampleThreshold;
    if (sampled) {
        SplitMix64 rng(seed);
        for (std::size_t i = 0; i < kSampleSize; ++i)
            picks.push_back(static_cast<std::size_t>(rng.below(autos.size())));
    } else {
        for (std::size_t i = 0; i < autos.size(); ++i) picks.push_back(i);
    }

    std::size_t ok = 0;
    for (std::size_t idx : picks)
        if (decompose(G, autos[idx]).verified) ++ok;
    pass = pass && ok == picks.size();

    report += "; " + std::to_string(ok) + "/" + std::to_string(picks.size()) + " decomposed";
    if (sampled) report += " (sampled)";
    report += pass ? "; PASS" : "; FAIL";
    std::cout << report << '\n';
    return pass ? 0 : 1;
}

int cmd_random_auto(const Params& prm, std::uint64_t seed, std::string prefix) {
    const Field F = make_field(prm);
    const SumGraph G = make_graph(prm, F);
    if (prefix.empty()) prefix = default_prefix(prm);

    SplitMix64 rng(seed);
    const SemilinearAuto g = random_auto(F, prm.n, rng);
    const VertexPermutation perm = as_vertex_permutation(g, G);

    const std::string perm_path = prefix + ".perm.tsv";
    const std::string truth_path = prefix + ".truth.txt";
    write_text_file(perm_path, format_permutation(perm));
    write_text_file(truth_path, format_auto(g));
    std::cout << "wrote " << perm_path << " and " << truth_path << '\n';
    return 0;
}

int cmd_decompose(const Params& prm, const std::string& perm_path, const std::string& out_path) {
    const Field F = make_field(prm);
    const SumGraph G = make_graph(prm, F);

    const VertexPermutation perm = parse_permutation(read_text_file(perm_path), G.num_vertices());
    const DecompositionCertificate cert = decompose(G, perm);
    write_text_file(out_path, certificate_json(cert, F, prm.n));

    if (cert.verified)
        std::cout << "verified: " << format_auto(*cert.map) << '\n';
    else
        std::cout << "rejected at stage " << cert.rejection_stage << '\n';
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subspace sum graph toolkit"};
    app.require_subcommand(1);

    Params prm;
    std::string format = "edge-list";
    std::string out;
    std::uint64_t limit = kDefaultNodeLimit;
    std::uint64_t seed = 0;
    std::string perm_file;

    CLI::App* build = app.add_subcommand("build", "write vertex table and graph export");
    add_params(build, prm);
    build->add_option("--format", format, "edge-list or dot")
        ->check(CLI::IsMember({"edge-list", "dot"}))
        ->capture_default_str();
    build->add_option("--out", out, "output path prefix");

    CLI::App* degrees = app.add_subcommand("degrees", "per-dimension degree table");
    add_params(degrees, prm);

    CLI::App* aut_count = app.add_subcommand("aut-count", "count graph automorphisms");
    add_params(aut_count, prm);
    aut_count->add_option("--limit", limit, "search node limit")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify-theorem",
                                          "compare brute-force count with the closed form and decompose");
    add_params(verify, prm);
    verify->add_option("--limit", limit, "search node limit")->capture_default_str();
    verify->add_option("--seed", seed, "seed for decomposition sampling")->capture_default_str();

    CLI::App* random = app.add_subcommand("random-auto", "sample a random semilinear automorphism");
    add_params(random, prm);
    random->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    random->add_option("--out", out, "output path prefix");

    CLI::App* dec = app.add_subcommand("decompose", "factor a vertex permutation as (A, s)");
    add_params(dec, prm);
    dec->add_option("perm_file", perm_file, "permutation file (src<TAB>dst per line)")->required();
    dec->add_option("--out", out, "certificate path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(prm, format, out);
        if (degrees->parsed()) return cmd_degrees(prm);
        if (aut_count->parsed()) return cmd_aut_count(prm, limit);
        if (verify->parsed()) return cmd_verify_theorem(prm, limit, seed);
        if (random->parsed()) return cmd_random_auto(prm, seed, out);
        if (dec->parsed()) return cmd_decompose(prm, perm_file, out.empty() ? "certificate.json" : out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
