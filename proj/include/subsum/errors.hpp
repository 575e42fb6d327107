#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subsum {

// Operands belong to different fields or have incompatible dimensions.
class params_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A requested construction would exceed the configured size cap.
class size_cap_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// Multiplicative inverse of the zero element.
class division_by_zero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Inversion of a matrix with deficient rank.
class singular_matrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A map on field elements matches no power of the Frobenius, or fails the
// field-automorphism laws.
class not_an_automorphism : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A span turned out to be the whole ambient space, which is not a graph
// vertex.  Distinct from invalid input: callers probing sums may want to
// catch exactly this case.
class full_space_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A closed-form degree term required a division with nonzero remainder.
class formula_integrity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Line images read during decomposition are not of the required shape.
class transition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed input text; line() is 1-based, 0 when not line-oriented.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Backtracking search ran past its node budget; carries the number of
// automorphisms found before the cutoff.
class search_limit_exceeded : public std::runtime_error {
public:
    search_limit_exceeded(std::uint64_t found, std::uint64_t nodes)
        : std::runtime_error("search node limit exceeded after " + std::to_string(nodes) +
                             " nodes (" + std::to_string(found) + " automorphisms found so far)"),
          found_(found),
          nodes_(nodes) {}

    std::uint64_t found() const noexcept { return found_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t found_;
    std::uint64_t nodes_;
};

}  // namespace subsum
