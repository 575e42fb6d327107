#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "subsum/errors.hpp"
#include "subsum/field.hpp"

using namespace subsum;

namespace {

// Test-side polynomial arithmetic over F_p, independent of the library's
// internals: coefficients low-degree-first.
using Poly = std::vector<std::uint32_t>;

int deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i]) return i;
    return -1;
}

Poly pmul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

Poly pmod(Poly f, const Poly& g, std::uint32_t p) {
    const int dg = deg(g);
    // Make g monic-scaled division: g is monic in all our uses.
    for (int d = deg(f); d >= dg; d = deg(f)) {
        const std::uint32_t c = f[d];
        for (int i = 0; i <= dg; ++i) f[d - dg + i] = (f[d - dg + i] + p - c * g[i] % p) % p;
    }
    return f;
}

// Encodes idx -> monic polynomial of degree d with coefficient vector read
// most-significant-first from c_0, mirroring the documented lexicographic
// order.
Poly monic(std::uint64_t idx, std::uint32_t d, std::uint32_t p) {
    Poly f(d + 1, 0);
    f[d] = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        f[d - 1 - i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    return f;
}

bool oracle_irreducible(const Poly& f, std::uint32_t p) {
    const int d = deg(f);
    for (int dd = 1; dd <= d / 2; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx)
            if (deg(pmod(f, monic(idx, static_cast<std::uint32_t>(dd), p), p)) < 0) return false;
    }
    return true;
}

Poly oracle_smallest_irreducible(std::uint32_t p, std::uint32_t m) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = monic(idx, m, p);
        if (oracle_irreducible(f, p)) return f;
    }
    return {};
}

// Element code -> coefficient vector and back, as documented: base-p digits,
// low degree first.
Poly decode(Fq a, std::uint32_t p, std::uint32_t m) {
    Poly f(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        f[i] = a % p;
        a /= p;
    }
    return f;
}

Fq encode(const Poly& f, std::uint32_t p) {
    Fq a = 0;
    for (std::size_t i = f.size(); i-- > 0;) a = a * p + f[i];
    return a;
}

Fq oracle_mul(const Field& F, Fq a, Fq b) {
    Poly prod = pmod(pmul(decode(a, F.p(), F.m()), decode(b, F.p(), F.m()), F.p()), F.modulus(), F.p());
    prod.resize(F.m());
    return encode(prod, F.p());
}

}  // namespace

TEST_SUITE("field") {

TEST_CASE("modulus is the lexicographically smallest monic irreducible") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
        const Field F = Field::make(p, m);
        CHECK(F.modulus() == oracle_smallest_irreducible(p, m));
        CHECK(F.modulus().size() == m + 1);
        CHECK(F.modulus().back() == 1);
        CHECK(oracle_irreducible(F.modulus(), p));
    }

    // Pinned values: prime fields get x; quartic field checked against the
    // classical minimal polynomials.
    CHECK(Field::make(2, 1).modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(Field::make(7, 1).modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});    // x^2+x+1
    CHECK(Field::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1}); // x^3+x^2+1
    CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});    // x^2+1
}

TEST_CASE("construction is deterministic and reports sizes") {
    const Field a = Field::make(3, 2);
    const Field b = Field::make(3, 2);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.q() == 9);
    CHECK(a.p() == 3);
    CHECK(a.m() == 2);
    CHECK(a.same(b));
    CHECK_FALSE(a.same(Field::make(2, 1)));
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 11), size_cap_error);  // 2048 > default cap 1024
    CHECK_THROWS_AS(Field::make(1031, 1), size_cap_error);
    CHECK(Field::make(2, 11, 4096).q() == 2048);  // raised cap admits it
}

TEST_CASE("multiplication matches the polynomial-reduction oracle") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {5, 1}}) {
        const Field F = Field::make(p, m);
        for (Fq a = 0; a < F.q(); ++a)
            for (Fq b = 0; b < F.q(); ++b) CHECK(F.mul(a, b) == oracle_mul(F, a, b));
    }

    // The quartic field's generator squares to its reduction: x*x = x+1.
    const Field F4 = Field::make(2, 2);
    CHECK(F4.mul(2, 2) == 3);
}

TEST_CASE("field axioms hold exhaustively") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {2, 5}, {5, 2}, {3, 3}, {2, 6}}) {
        const Field F = Field::make(p, m);
        const Fq q = static_cast<Fq>(F.q());
        for (Fq a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.mul(a, 0) == 0);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (Fq b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
                for (Fq c = 0; c < q; ++c) {
                    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("division by zero and range violations are rejected") {
    const Field F = Field::make(3, 1);
    CHECK_THROWS_AS(F.inv(0), division_by_zero);
    CHECK_THROWS_AS(F.add(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(F.mul(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(F.frobenius(1, 1), std::invalid_argument);  // s must be < m
}

TEST_CASE("small-field facts pin the arithmetic") {
    const Field F2 = Field::make(2, 1);
    CHECK(F2.add(1, 1) == 0);
    CHECK(F2.frobenius(1, 0) == 1);

    const Field F3 = Field::make(3, 1);
    CHECK(F3.inv(2) == 2);  // 2*2 = 4 = 1
    CHECK(F3.mul(2, 2) == 1);
    CHECK(F3.neg(1) == 2);

    // Squaring permutes F_4 by swapping the two non-subfield elements.
    const Field F4 = Field::make(2, 2);
    std::vector<Fq> squares;
    for (Fq a = 0; a < 4; ++a) squares.push_back(F4.mul(a, a));
    CHECK(squares == std::vector<Fq>{0, 1, 3, 2});
    CHECK(F4.frobenius(2, 1) == 3);
    CHECK(F4.frobenius(3, 1) == 2);
}

TEST_CASE("pow matches iterated multiplication and Fermat") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {5, 1}, {2, 4}}) {
        const Field F = Field::make(p, m);
        for (Fq a = 0; a < F.q(); ++a) {
            Fq acc = 1;
            for (std::uint64_t e = 0; e < 2 * F.q(); ++e) {
                CHECK(F.pow(a, e) == acc);
                acc = F.mul(acc, a);
            }
            CHECK(F.pow(a, F.q()) == a);  // x^q = x
        }
    }
}

TEST_CASE("frobenius powers are automorphisms forming a cyclic group") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        const Field F = Field::make(p, m);
        const Fq q = static_cast<Fq>(F.q());

        for (std::uint32_t s = 0; s < m; ++s) {
            for (Fq a = 0; a < q; ++a) {
                // a^(p^s) recomputed by repeated p-th powers.
                Fq expect = a;
                for (std::uint32_t i = 0; i < s; ++i) expect = F.pow(expect, F.p());
                CHECK(F.frobenius(a, s) == expect);
                for (Fq b = 0; b < q; ++b) {
                    CHECK(F.frobenius(F.add(a, b), s) == F.add(F.frobenius(a, s), F.frobenius(b, s)));
                    CHECK(F.frobenius(F.mul(a, b), s) == F.mul(F.frobenius(a, s), F.frobenius(b, s)));
                }
            }
            CHECK(F.frobenius(1, s) == 1);
        }

        // Distinctness and composition law (cyclic of order m).
        std::vector<std::vector<Fq>> tables(m);
        for (std::uint32_t s = 0; s < m; ++s)
            for (Fq a = 0; a < q; ++a) tables[s].push_back(F.frobenius(a, s));
        for (std::uint32_t s = 0; s < m; ++s)
            for (std::uint32_t t = s + 1; t < m; ++t) CHECK(tables[s] != tables[t]);
        for (std::uint32_t s = 0; s < m; ++s)
            for (std::uint32_t t = 0; t < m; ++t)
                for (Fq a = 0; a < q; ++a)
                    CHECK(F.frobenius(F.frobenius(a, t), s) == F.frobenius(a, (s + t) % m));
        for (Fq a = 0; a < q; ++a) CHECK(F.frobenius(a, 0) == a);
    }
}

TEST_CASE("identify_automorphism recovers the exponent and rejects impostors") {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 1}}) {
        const Field F = Field::make(p, m);
        for (std::uint32_t s = 0; s < m; ++s) {
            std::vector<Fq> table;
            for (Fq a = 0; a < F.q(); ++a) table.push_back(F.frobenius(a, s));
            CHECK(F.identify_automorphism(table) == s);
        }
    }

    const Field F4 = Field::make(2, 2);
    CHECK(F4.identify_automorphism({0, 1, 3, 2}) == 1);
    CHECK_THROWS_AS(F4.identify_automorphism({0, 1, 2, 2}), not_an_automorphism);  // not injective
    CHECK_THROWS_AS(F4.identify_automorphism({0, 1, 2}), std::invalid_argument);   // not total

    // A bijection fixing 0 and 1 that is not multiplicative-additive.
    const Field F5 = Field::make(5, 1);
    CHECK_THROWS_AS(F5.identify_automorphism({0, 1, 3, 2, 4}), not_an_automorphism);
}

}  // TEST_SUITE
