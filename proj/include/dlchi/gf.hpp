#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "dlchi/errors.hpp"

namespace dlchi {

namespace detail {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/* Coefficient vectors over GF(p), ascending degree, no trailing zeros. */
inline void gfp_trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<int> gfp_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    while (static_cast<int>(a.size()) >= static_cast<int>(m.size()) && !a.empty()) {
        int shift = static_cast<int>(a.size()) - static_cast<int>(m.size());
        // m is monic, so the factor is just the leading coefficient of a
        int f = a.back();
        if (f != 0) {
            for (size_t i = 0; i < m.size(); ++i) {
                int& t = a[i + static_cast<size_t>(shift)];
                t = (t - f * m[i]) % p;
                if (t < 0) t += p;
            }
        }
        a.pop_back();
        gfp_trim(a);
    }
    return a;
}

inline std::vector<int> gfp_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                                   const std::vector<int>& m, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    gfp_trim(r);
    return gfp_mod(std::move(r), m, p);
}

/* Remainder of a by the monic divisor d over GF(p); used for the
   irreducibility sieve. */
inline bool gfp_divides(const std::vector<int>& d, std::vector<int> a, int p) {
    return gfp_mod(std::move(a), d, p).empty();
}

inline bool gfp_irreducible(const std::vector<int>& m, int p) {
    int k = static_cast<int>(m.size()) - 1;
    if (k <= 1) return true;
    // trial division by every monic polynomial of degree 1..k/2 is enough,
    // since any factor of a composite contains an irreducible of low degree
    for (int d = 1; 2 * d <= k; ++d) {
        std::vector<int> cand(static_cast<size_t>(d) + 1, 0);
        cand.back() = 1;
        long long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (long long t = 0; t < total; ++t) {
            long long v = t;
            for (int i = 0; i < d; ++i) {
                cand[static_cast<size_t>(i)] = static_cast<int>(v % p);
                v /= p;
            }
            if (gfp_divides(cand, m, p)) return false;
        }
    }
    return true;
}

} // namespace detail

/* GF(p^k) with elements indexed 0..p^k-1. The index encodes the coefficient
   vector of the residue polynomial in base p: index = sum digit_i * p^i.
   In particular 0 and 1 are the additive and multiplicative identities and
   indices below p are the prime subfield.

   The modulus is the monic irreducible of degree k whose non-leading
   coefficients have the smallest base-p encoding; for GF(4) this picks
   x^2 + x + 1. Fields up to 2^16 are supported; small fields precompute
   full operation tables. */
class FiniteField {
public:
    static constexpr uint32_t kTableLimit = 512;

    FiniteField(int p, int k) : p_(p), k_(k) {
        if (!detail::is_prime(p)) throw usage_error("field characteristic must be prime");
        if (k < 1) throw usage_error("field degree must be at least 1");
        long long q = 1;
        for (int i = 0; i < k; ++i) {
            q *= p;
            if (q > 65536) throw usage_error("field order must be at most 2^16");
        }
        q_ = static_cast<uint32_t>(q);

        modulus_.assign(static_cast<size_t>(k) + 1, 0);
        modulus_.back() = 1;
        if (k > 1) {
            long long tail_count = q;
            bool found = false;
            for (long long t = 0; t < tail_count; ++t) {
                long long v = t;
                for (int i = 0; i < k; ++i) {
                    modulus_[static_cast<size_t>(i)] = static_cast<int>(v % p);
                    v /= p;
                }
                if (detail::gfp_irreducible(modulus_, p)) { found = true; break; }
            }
            if (!found) throw internal_error("no irreducible modulus found");
        }

        if (q_ <= kTableLimit) {
            add_.resize(static_cast<size_t>(q_) * q_);
            mul_.resize(static_cast<size_t>(q_) * q_);
            neg_.resize(q_);
            inv_.assign(q_, 0);
            for (uint32_t a = 0; a < q_; ++a) {
                neg_[a] = slow_neg(static_cast<uint16_t>(a));
                for (uint32_t b = 0; b < q_; ++b) {
                    add_[static_cast<size_t>(a) * q_ + b] =
                        slow_add(static_cast<uint16_t>(a), static_cast<uint16_t>(b));
                    mul_[static_cast<size_t>(a) * q_ + b] =
                        slow_mul(static_cast<uint16_t>(a), static_cast<uint16_t>(b));
                }
            }
            for (uint32_t a = 1; a < q_; ++a) {
                for (uint32_t b = 1; b < q_; ++b) {
                    if (mul_[static_cast<size_t>(a) * q_ + b] == 1) { inv_[a] = static_cast<uint16_t>(b); break; }
                }
                if (inv_[a] == 0) throw internal_error("modulus is not irreducible");
            }
            tables_ = true;
        }
    }

    uint32_t order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return k_; }
    bool prime_field() const { return k_ == 1; }
    const std::vector<int>& modulus() const { return modulus_; }

    uint16_t add(uint16_t a, uint16_t b) const {
        return tables_ ? add_[static_cast<size_t>(a) * q_ + b] : slow_add(a, b);
    }
    uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }
    uint16_t neg(uint16_t a) const { return tables_ ? neg_[a] : slow_neg(a); }
    uint16_t mul(uint16_t a, uint16_t b) const {
        return tables_ ? mul_[static_cast<size_t>(a) * q_ + b] : slow_mul(a, b);
    }

    uint16_t inv(uint16_t a) const {
        if (a == 0) throw usage_error("inverting zero field element");
        if (tables_) return inv_[a];
        return pow(a, static_cast<long long>(q_) - 2);
    }

    uint16_t pow(uint16_t a, long long e) const {
        if (e < 0) return pow(inv(a), -e);
        uint16_t r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /* Raw table access for inner loops. Null when the field is too large
       for tables. */
    const uint16_t* add_table() const { return tables_ ? add_.data() : nullptr; }
    const uint16_t* mul_table() const { return tables_ ? mul_.data() : nullptr; }

    std::vector<int> digits(uint16_t a) const {
        std::vector<int> d(static_cast<size_t>(k_));
        uint32_t v = a;
        for (int i = 0; i < k_; ++i) {
            d[static_cast<size_t>(i)] = static_cast<int>(v % static_cast<uint32_t>(p_));
            v /= static_cast<uint32_t>(p_);
        }
        return d;
    }

    std::string element_string(uint16_t a) const {
        if (prime_field() || a < static_cast<uint16_t>(p_)) return std::to_string(a);
        std::vector<int> d = digits(a);
        std::ostringstream os;
        bool first = true;
        for (int i = k_ - 1; i >= 0; --i) {
            int c = d[static_cast<size_t>(i)];
            if (c == 0) continue;
            if (!first) os << "+";
            if (i == 0 || c > 1) os << c;
            if (i >= 1) {
                if (c > 1) os << "*";
                os << "x";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    uint16_t slow_add(uint16_t a, uint16_t b) const {
        uint32_t r = 0, mult = 1;
        uint32_t va = a, vb = b;
        for (int i = 0; i < k_; ++i) {
            uint32_t da = va % static_cast<uint32_t>(p_), db = vb % static_cast<uint32_t>(p_);
            r += ((da + db) % static_cast<uint32_t>(p_)) * mult;
            va /= static_cast<uint32_t>(p_);
            vb /= static_cast<uint32_t>(p_);
            mult *= static_cast<uint32_t>(p_);
        }
        return static_cast<uint16_t>(r);
    }

    uint16_t slow_neg(uint16_t a) const {
        uint32_t r = 0, mult = 1;
        uint32_t va = a;
        for (int i = 0; i < k_; ++i) {
            uint32_t da = va % static_cast<uint32_t>(p_);
            r += ((static_cast<uint32_t>(p_) - da) % static_cast<uint32_t>(p_)) * mult;
            va /= static_cast<uint32_t>(p_);
            mult *= static_cast<uint32_t>(p_);
        }
        return static_cast<uint16_t>(r);
    }

    uint16_t slow_mul(uint16_t a, uint16_t b) const {
        std::vector<int> pa = digits(a), pb = digits(b);
        detail::gfp_trim(pa);
        detail::gfp_trim(pb);
        std::vector<int> r = detail::gfp_mulmod(pa, pb, modulus_, p_);
        uint32_t v = 0, mult = 1;
        for (size_t i = 0; i < static_cast<size_t>(k_); ++i) {
            if (i < r.size()) v += static_cast<uint32_t>(r[i]) * mult;
            mult *= static_cast<uint32_t>(p_);
        }
        return static_cast<uint16_t>(v);
    }

    int p_, k_;
    uint32_t q_;
    std::vector<int> modulus_;
    bool tables_ = false;
    std::vector<uint16_t> add_, mul_, neg_, inv_;
};

inline FiniteField make_field(int p, int k) { return FiniteField(p, k); }

} // namespace dlchi
