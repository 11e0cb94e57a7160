#include "stabgeom/field.hpp"

#include <algorithm>
#include <map>

namespace stabgeom {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Polynomials over F_p as coefficient vectors c0..cd, trailing zeros trimmed.
using Poly = std::vector<elem>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = elem((c[i + j] + std::uint32_t(a[i]) * b[j]) % p);
    return trim(c);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    // Fermat; p prime, a != 0
    std::uint64_t r = 1, base = a % p;
    std::uint32_t n = p - 2;
    while (n) {
        if (n & 1) r = r * base % p;
        base = base * base % p;
        n >>= 1;
    }
    return std::uint32_t(r);
}

// a mod m over F_p
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    a = trim(std::move(a));
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = mod_inv(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint32_t f = std::uint64_t(a.back()) * lead_inv % p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint32_t sub = std::uint64_t(f) * m[i] % p;
            std::uint32_t cur = a[i + shift];
            a[i + shift] = elem((cur + p - sub) % p);
        }
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

bool poly_divides(const Poly& d, const Poly& a, std::uint32_t p) {
    return poly_mod(a, d, p).empty();
}

// Trial factorization: no monic factor of degree 1..deg/2.
bool poly_irreducible(const Poly& m, std::uint32_t p) {
    const std::size_t deg = m.size() - 1;
    if (deg < 1) return false;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        // iterate monic polys of degree d: p^d choices of lower coefficients
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= p;
        for (std::uint64_t code = 0; code < total; ++code) {
            Poly cand(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) { cand[i] = elem(c % p); c /= p; }
            cand[d] = 1;
            if (poly_divides(cand, m, p)) return false;
        }
    }
    return true;
}

elem encode(const Poly& a, std::uint32_t p) {
    std::uint32_t v = 0, mult = 1;
    for (elem c : a) { v += c * mult; mult *= p; }
    return elem(v);
}

Poly decode(elem v, std::uint32_t p) {
    Poly a;
    std::uint32_t x = v;
    while (x) { a.push_back(elem(x % p)); x /= p; }
    return a;
}

const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& builtin_moduli() {
    // Conway polynomials for the supported extension sizes.
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> tab = {
        {{2, 2}, {1, 1, 1}},       // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},    // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {{3, 2}, {2, 2, 1}},       // x^2 + 2x + 2
        {{3, 3}, {1, 2, 0, 1}},    // x^3 + 2x + 1
        {{5, 2}, {2, 4, 1}},       // x^2 + 4x + 2
    };
    return tab;
}

} // namespace

Field Field::make(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw not_prime_error("field_make: p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw unsupported_size_error("field_make: e must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > 65536) throw unsupported_size_error("field_make: q exceeds 2^16");
    }

    auto d = std::make_shared<Data>();
    d->p = p;
    d->e = e;
    d->q = std::uint32_t(q);

    if (e == 1) return Field(std::move(d));

    auto it = builtin_moduli().find({p, e});
    if (it == builtin_moduli().end())
        throw no_modulus_error("field_make: no built-in irreducible modulus for p=" +
                               std::to_string(p) + ", e=" + std::to_string(e));
    const Poly& m = it->second;
    if (!poly_irreducible(m, p)) throw error("field_make: built-in modulus failed irreducibility check");
    d->modulus = m;

    // addition and negation tables (digit-wise mod p)
    d->add_tab.resize(std::size_t(q) * q);
    d->neg_tab.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        Poly pa = decode(elem(a), p);
        pa.resize(e, 0);
        Poly na(e, 0);
        for (std::uint32_t i = 0; i < e; ++i) na[i] = elem((p - pa[i]) % p);
        d->neg_tab[a] = encode(na, p);
        for (std::uint32_t b = 0; b < q; ++b) {
            Poly pb = decode(elem(b), p);
            pb.resize(e, 0);
            Poly s(e, 0);
            for (std::uint32_t i = 0; i < e; ++i) s[i] = elem((pa[i] + pb[i]) % p);
            d->add_tab[std::size_t(a) * q + b] = encode(s, p);
        }
    }

    // find a multiplicative generator and build exp/log tables
    auto mul_raw = [&](elem a, elem b) {
        return encode(poly_mod(poly_mul(decode(a, p), decode(b, p), p), m, p), p);
    };
    for (std::uint32_t g = 2; g < q; ++g) {
        std::vector<std::int32_t> logt(q, -1);
        std::vector<elem> expt;
        elem x = 1;
        bool ok = true;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            if (logt[x] != -1) { ok = false; break; } // order < q-1
            logt[x] = std::int32_t(i);
            expt.push_back(x);
            x = mul_raw(x, elem(g));
        }
        if (ok && x == 1) {
            // double the exp table so exp[la + lb] needs no reduction
            expt.reserve(2 * (q - 1) - 1);
            for (std::uint32_t i = 0; i + 1 < q - 1; ++i) expt.push_back(expt[i]);
            d->exp_tab = std::move(expt);
            d->log_tab = std::move(logt);
            return Field(std::move(d));
        }
    }
    throw error("field_make: no generator found (should be impossible)");
}

elem Field::inv(elem a) const {
    if (a == 0) throw error("Field::inv of zero");
    if (d_->e == 1) {
        // Fermat
        return pow(a, d_->q - 2);
    }
    std::int32_t la = d_->log_tab[a];
    if (la == 0) return 1;
    return d_->exp_tab[d_->q - 1 - std::uint32_t(la)];
}

elem Field::pow(elem a, std::uint64_t n) const {
    elem r = 1, base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

} // namespace stabgeom
