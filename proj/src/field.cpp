#include "subsum/field.hpp"

#include <algorithm>
#include <string>

namespace subsum {

namespace {

// Full operation tables are built up to this q; larger fields (possible only
// with a raised cap) fall back to per-operation polynomial arithmetic.
constexpr std::uint64_t kTableLimit = 1024;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, low degree first

int degree(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    return r;
}

// Remainder of f modulo a monic divisor.
Poly poly_mod(Poly f, const Poly& divisor, std::uint32_t p) {
    const int dd = degree(divisor);
    for (int d = degree(f); d >= dd; d = degree(f)) {
        const std::uint32_t c = f[d];
        for (int i = 0; i <= dd; ++i) {
            std::uint64_t sub = static_cast<std::uint64_t>(c) * divisor[i] % p;
            f[d - dd + i] = static_cast<std::uint32_t>((f[d - dd + i] + p - sub) % p);
        }
    }
    f.resize(std::max(dd, 1));
    return f;
}

bool divides(const Poly& divisor, const Poly& f, std::uint32_t p) {
    return degree(poly_mod(f, divisor, p)) < 0;
}

// Monic polynomial of degree d whose low coefficients are the base-p digits
// of idx with c_0 as the most significant digit, matching lexicographic order
// on (c_0, ..., c_{d-1}).
// Index-to-polynomial map whose enumeration order is lexicographic in the
// coefficient sequence (c_0, ..., c_{d-1}): the highest-degree coefficient
// cycles fastest.
Poly monic_from_index(std::uint64_t idx, std::uint32_t d, std::uint32_t p) {
    Poly f(d + 1, 0);
    f[d] = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        f[d - 1 - i] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
    }
    return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::uint32_t d = static_cast<std::uint32_t>(degree(f));
    for (std::uint32_t dd = 1; dd <= d / 2; ++dd) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx)
            if (divides(monic_from_index(idx, dd, p), f, p)) return false;
    }
    return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t m) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = monic_from_index(idx, m, p);
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("no monic irreducible polynomial found");  // unreachable
}

}  // namespace

struct Field::Data {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    Poly modulus;

    // q*q tables when q <= kTableLimit, otherwise empty.
    std::vector<Fq> add_tab;
    std::vector<Fq> mul_tab;
    std::vector<Fq> inv_tab;   // q entries, slot 0 unused
    std::vector<Fq> frob_tab;  // m*q entries: frob_tab[s*q + a] = a^(p^s)

    std::vector<std::uint32_t> decode(Fq a) const {
        std::vector<std::uint32_t> digits(m, 0);
        for (std::uint32_t i = 0; i < m && a != 0; ++i) {
            digits[i] = a % p;
            a /= p;
        }
        return digits;
    }

    Fq encode(const std::vector<std::uint32_t>& digits) const {
        Fq a = 0;
        for (std::uint32_t i = m; i-- > 0;) a = a * p + (i < digits.size() ? digits[i] : 0);
        return a;
    }

    Fq add_slow(Fq a, Fq b) const {
        Fq r = 0, scale = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            r += (a % p + b % p) % p * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return r;
    }

    Fq neg_slow(Fq a) const {
        Fq r = 0, scale = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            r += (p - a % p) % p * scale;
            a /= p;
            scale *= p;
        }
        return r;
    }

    Fq mul_slow(Fq a, Fq b) const {
        Poly prod = poly_mul(decode(a), decode(b), p);
        return encode(poly_mod(std::move(prod), modulus, p));
    }
};

Field::Field(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

Field Field::make(std::uint32_t p, std::uint32_t m, std::uint64_t q_cap) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw std::invalid_argument("extension degree must be at least 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > q_cap)
            throw size_cap_error("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                 " exceeds cap " + std::to_string(q_cap));
    }

    auto d = std::make_shared<Data>();
    d->p = p;
    d->m = m;
    d->q = static_cast<std::uint32_t>(q);
    d->modulus = smallest_irreducible(p, m);

    if (q <= kTableLimit) {
        d->add_tab.resize(q * q);
        d->mul_tab.resize(q * q);
        for (Fq a = 0; a < q; ++a)
            for (Fq b = 0; b <= a; ++b) {
                const Fq s = d->add_slow(a, b);
                const Fq t = d->mul_slow(a, b);
                d->add_tab[a * q + b] = d->add_tab[b * q + a] = s;
                d->mul_tab[a * q + b] = d->mul_tab[b * q + a] = t;
            }
    }

    Field f{std::shared_ptr<const Data>(d)};

    // a^(q-2) inverts every nonzero a; built after the op tables so pow can
    // use them.
    d->inv_tab.resize(q, 0);
    for (Fq a = 1; a < q; ++a) d->inv_tab[a] = f.pow(a, q - 2);

    d->frob_tab.resize(static_cast<std::size_t>(m) * q);
    for (Fq a = 0; a < q; ++a) d->frob_tab[a] = a;
    for (std::uint32_t s = 1; s < m; ++s)
        for (Fq a = 0; a < q; ++a)
            d->frob_tab[s * q + a] = f.pow(d->frob_tab[(s - 1) * q + a], p);

    return f;
}

std::uint32_t Field::p() const noexcept { return data_->p; }
std::uint32_t Field::m() const noexcept { return data_->m; }
std::uint32_t Field::q() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return data_->modulus; }

void Field::check_element(Fq a) const {
    if (a >= data_->q)
        throw std::invalid_argument("element code " + std::to_string(a) + " out of range for q = " +
                                    std::to_string(data_->q));
}

Fq Field::add(Fq a, Fq b) const {
    check_element(a);
    check_element(b);
    const auto& d = *data_;
    return d.add_tab.empty() ? d.add_slow(a, b) : d.add_tab[static_cast<std::size_t>(a) * d.q + b];
}

Fq Field::neg(Fq a) const {
    check_element(a);
    return data_->neg_slow(a);
}

Fq Field::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq Field::mul(Fq a, Fq b) const {
    check_element(a);
    check_element(b);
    const auto& d = *data_;
    return d.mul_tab.empty() ? d.mul_slow(a, b) : d.mul_tab[static_cast<std::size_t>(a) * d.q + b];
}

Fq Field::inv(Fq a) const {
    check_element(a);
    if (a == 0) throw division_by_zero("inverse of zero");
    return data_->inv_tab[a];
}

Fq Field::pow(Fq a, std::uint64_t e) const {
    check_element(a);
    Fq r = 1;
    while (e != 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Fq Field::frobenius(Fq a, std::uint32_t s) const {
    check_element(a);
    if (s >= data_->m)
        throw std::invalid_argument("frobenius exponent " + std::to_string(s) +
                                    " out of range [0, " + std::to_string(data_->m) + ")");
    return data_->frob_tab[static_cast<std::size_t>(s) * data_->q + a];
}

std::uint32_t Field::identify_automorphism(const std::vector<Fq>& table) const {
    const auto& d = *data_;
    if (table.size() != d.q)
        throw std::invalid_argument("automorphism table must be total on the field");
    for (std::uint32_t s = 0; s < d.m; ++s) {
        bool match = true;
        for (Fq a = 0; a < d.q && match; ++a) match = table[a] == d.frob_tab[static_cast<std::size_t>(s) * d.q + a];
        if (match) return s;
    }
    throw not_an_automorphism("table matches no Frobenius power");
}

bool Field::same(const Field& other) const noexcept {
    return data_ == other.data_ || (data_->p == other.data_->p && data_->m == other.data_->m);
}

}  // namespace subsum
