#include "subsum/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace subsum {

std::string format_permutation(const VertexPermutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += '\n';
        out += std::to_string(i + 1);
        out += '\t';
        out += std::to_string(p(i) + 1);
    }
    return out;
}

VertexPermutation parse_permutation(const std::string& text, std::size_t num_vertices) {
    std::vector<std::size_t> image(num_vertices, num_vertices);  // num_vertices = unset
    std::vector<bool> src_seen(num_vertices, false);
    std::vector<bool> dst_seen(num_vertices, false);

    std::istringstream ss(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::istringstream ls(line);
        unsigned long src = 0, dst = 0;
        if (!(ls >> src >> dst)) throw parse_error("expected 'src<TAB>dst'", line_no);
        std::string rest;
        if (ls >> rest) throw parse_error("trailing content '" + rest + "'", line_no);
        if (src < 1 || src > num_vertices)
            throw parse_error("source id " + std::to_string(src) + " out of range [1, " +
                                  std::to_string(num_vertices) + "]",
                              line_no);
        if (dst < 1 || dst > num_vertices)
            throw parse_error("destination id " + std::to_string(dst) + " out of range [1, " +
                                  std::to_string(num_vertices) + "]",
                              line_no);
        if (src_seen[src - 1])
            throw parse_error("source id " + std::to_string(src) + " listed twice", line_no);
        if (dst_seen[dst - 1])
            throw parse_error("destination id " + std::to_string(dst) + " listed twice", line_no);
        src_seen[src - 1] = true;
        dst_seen[dst - 1] = true;
        image[src - 1] = dst - 1;
    }

    std::size_t covered = 0;
    for (bool b : src_seen) covered += b;
    if (covered != num_vertices)
        throw parse_error("permutation covers " + std::to_string(covered) + " of " +
                          std::to_string(num_vertices) + " vertex ids");

    try {
        return VertexPermutation(std::move(image));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

std::string certificate_json(const DecompositionCertificate& cert, const Field& F, std::size_t n) {
    nlohmann::json j;
    j["verified"] = cert.verified;
    j["rejection_stage"] = cert.rejection_stage.empty() ? nlohmann::json() : nlohmann::json(cert.rejection_stage);
    j["A"] = cert.map ? nlohmann::json(format_matrix(cert.map->matrix())) : nlohmann::json();
    j["s"] = cert.map ? nlohmann::json(cert.map->frob_exponent()) : nlohmann::json();
    j["B"] = cert.B ? nlohmann::json(format_matrix(*cert.B)) : nlohmann::json();
    j["D"] = cert.D ? nlohmann::json(format_matrix(*cert.D)) : nlohmann::json();
    j["n"] = n;
    j["p"] = F.p();
    j["m"] = F.m();
    j["irreducible"] = F.modulus();
    return j.dump(2);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace subsum
