#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "subsum/errors.hpp"

namespace subsum {

// Canonical element code in [0, q).
using Fq = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldCap = 1024;

// Arithmetic in F_q, q = p^m, in the polynomial basis over F_p.
//
// An element with coefficients (c_0, ..., c_{m-1}) is encoded as the base-p
// integer sum c_i * p^i, so codes 0 and 1 are the additive and multiplicative
// identities and the encoding is a bijection [0, q) <-> F_q. The modulus is
// the lexicographically smallest monic irreducible polynomial of degree m
// over F_p (coefficients compared low-degree-first), found by trial division;
// fixed (p, m) therefore always yields the same encoding. All state is
// immutable after construction and shared by value copies, so a Field is
// freely usable across threads.
class Field {
public:
    // Throws std::invalid_argument for non-prime p or m < 1, size_cap_error
    // when p^m exceeds q_cap.
    static Field make(std::uint32_t p, std::uint32_t m,
                      std::uint64_t q_cap = kDefaultFieldCap);

    std::uint32_t p() const noexcept;
    std::uint32_t m() const noexcept;
    std::uint32_t q() const noexcept;

    // Modulus polynomial coefficients, low degree first, length m+1, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;  // throws division_by_zero on a = 0
    Fq pow(Fq a, std::uint64_t e) const;

    // a^(p^s) for 0 <= s < m; s = 0 is the identity. Each such map is a field
    // automorphism and the m of them form a cyclic group under composition.
    Fq frobenius(Fq a, std::uint32_t s) const;

    // The unique s with table[a] = a^(p^s) for all a; table is indexed by
    // element code and must have size q. Throws not_an_automorphism when no
    // power matches.
    std::uint32_t identify_automorphism(const std::vector<Fq>& table) const;

    // Same (p, m); two Fields constructed alike share element encodings.
    bool same(const Field& other) const noexcept;

private:
    struct Data;
    explicit Field(std::shared_ptr<const Data> data);

    void check_element(Fq a) const;

    std::shared_ptr<const Data> data_;
};

}  // namespace subsum
