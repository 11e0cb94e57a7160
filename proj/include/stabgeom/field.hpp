#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "stabgeom/errors.hpp"

namespace stabgeom {

/// A finite field element, stored as an integer in [0, q).
/// For extension fields the integer encodes the coefficient vector of the
/// polynomial representative in base p: a0 + a1*p + ... + a_{e-1}*p^{e-1}.
using elem = std::uint16_t;

// Finite field F_q with q = p^e <= 2^16.  Prime fields compute mod p;
// extension fields use exp/log tables built from a built-in irreducible
// modulus (available for q in {4, 8, 9, 16, 25, 27}).  Immutable and
// cheap to copy; safe to share across threads.
class Field {
public:
    static Field make(std::uint32_t p, std::uint32_t e = 1);

    std::uint32_t p() const { return d_->p; }
    std::uint32_t e() const { return d_->e; }
    std::uint32_t q() const { return d_->q; }

    /// Modulus coefficients c0..ce (monic), empty for prime fields.
    const std::vector<elem>& modulus() const { return d_->modulus; }

    elem add(elem a, elem b) const {
        if (d_->e == 1) {
            std::uint32_t s = std::uint32_t(a) + b;
            if (s >= d_->q) s -= d_->q;
            return elem(s);
        }
        return d_->add_tab[std::size_t(a) * d_->q + b];
    }

    elem neg(elem a) const {
        if (d_->e == 1) return a == 0 ? 0 : elem(d_->q - a);
        return d_->neg_tab[a];
    }

    elem sub(elem a, elem b) const { return add(a, neg(b)); }

    elem mul(elem a, elem b) const {
        if (a == 0 || b == 0) return 0;
        if (d_->e == 1) return elem(std::uint64_t(a) * b % d_->q);
        return d_->exp_tab[std::size_t(d_->log_tab[a]) + d_->log_tab[b]];
    }

    elem inv(elem a) const;
    elem pow(elem a, std::uint64_t n) const;

    bool operator==(const Field& o) const {
        return d_ == o.d_ || (d_->p == o.d_->p && d_->e == o.d_->e && d_->modulus == o.d_->modulus);
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    struct Data {
        std::uint32_t p = 0, e = 0, q = 0;
        std::vector<elem> modulus;        // empty when e == 1
        std::vector<elem> add_tab;        // q*q, e > 1 only
        std::vector<elem> neg_tab;        // q, e > 1 only
        std::vector<elem> exp_tab;        // 2(q-1)-1 powers of a generator, e > 1
        std::vector<std::int32_t> log_tab; // q, log_tab[0] = -1
    };
    explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

bool is_prime(std::uint64_t n);

} // namespace stabgeom
