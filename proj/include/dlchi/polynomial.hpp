#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "dlchi/bigint.hpp"
#include "dlchi/errors.hpp"

namespace dlchi {

/* Dense univariate polynomial over Z, coefficients ascending by degree.
   The zero polynomial has no coefficients and degree -1. */
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(const BigInt& v) { return IntPolynomial({v}); }

    static IntPolynomial monomial(int degree, const BigInt& v) {
        std::vector<BigInt> c(static_cast<size_t>(degree) + 1, BigInt(0));
        c.back() = v;
        return IntPolynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coefficients() const { return c_; }

    BigInt coefficient(int d) const {
        if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<size_t>(d)];
    }

    void set_coefficient(int d, const BigInt& v) {
        if (d < 0) throw usage_error("negative degree");
        if (d >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(d) + 1, BigInt(0));
        c_[static_cast<size_t>(d)] = v;
        trim();
    }

    BigInt operator()(const BigInt& x) const {
        BigInt r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator-(const IntPolynomial& o) const {
        std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return IntPolynomial(std::move(r));
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero()) return IntPolynomial();
        std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return IntPolynomial(std::move(r));
    }

    bool operator==(const IntPolynomial& o) const = default;

    std::string to_string(const std::string& var = "q") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = degree(); d >= 0; --d) {
            const BigInt& v = c_[static_cast<size_t>(d)];
            if (v == 0) continue;
            if (!first) os << (v > 0 ? " + " : " - ");
            else if (v < 0) os << "-";
            BigInt a = abs(v);
            if (d == 0 || a != 1) os << a.str();
            if (d > 0) {
                if (a != 1) os << "*";
                os << var;
                if (d > 1) os << "^" << d;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/* Same shape over Q. Supports the division needed for gcd reduction. */
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RatPolynomial constant(const BigRat& v) { return RatPolynomial({v}); }

    static RatPolynomial from_int(const IntPolynomial& p) {
        std::vector<BigRat> c;
        c.reserve(p.coefficients().size());
        for (const BigInt& v : p.coefficients()) c.emplace_back(v);
        return RatPolynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigRat>& coefficients() const { return c_; }

    BigRat coefficient(int d) const {
        if (d < 0 || d >= static_cast<int>(c_.size())) return 0;
        return c_[static_cast<size_t>(d)];
    }

    BigRat operator()(const BigRat& x) const {
        BigRat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    RatPolynomial operator+(const RatPolynomial& o) const {
        std::vector<BigRat> r(std::max(c_.size(), o.c_.size()), BigRat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return RatPolynomial(std::move(r));
    }

    RatPolynomial operator-(const RatPolynomial& o) const {
        std::vector<BigRat> r(std::max(c_.size(), o.c_.size()), BigRat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return RatPolynomial(std::move(r));
    }

    RatPolynomial operator*(const RatPolynomial& o) const {
        if (is_zero() || o.is_zero()) return RatPolynomial();
        std::vector<BigRat> r(c_.size() + o.c_.size() - 1, BigRat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return RatPolynomial(std::move(r));
    }

    RatPolynomial operator*(const BigRat& s) const {
        std::vector<BigRat> r = c_;
        for (auto& v : r) v *= s;
        return RatPolynomial(std::move(r));
    }

    /* Euclidean division; returns (quotient, remainder). */
    std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& d) const {
        if (d.is_zero()) throw usage_error("polynomial division by zero");
        RatPolynomial rem = *this;
        std::vector<BigRat> q(rem.c_.size() > d.c_.size() - 1 ? rem.c_.size() - d.c_.size() + 1 : 0,
                              BigRat(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int shift = rem.degree() - d.degree();
            BigRat f = rem.c_.back() / d.c_.back();
            q[static_cast<size_t>(shift)] = f;
            for (size_t i = 0; i < d.c_.size(); ++i)
                rem.c_[i + static_cast<size_t>(shift)] -= f * d.c_[i];
            rem.trim();
        }
        return {RatPolynomial(std::move(q)), rem};
    }

    /* Monic gcd. */
    static RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
        while (!b.is_zero()) {
            RatPolynomial r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {
            BigRat lead = a.c_.back();
            for (auto& v : a.c_) v /= lead;
        }
        return a;
    }

    bool is_integral() const {
        for (const auto& v : c_)
            if (denominator(v) != 1) return false;
        return true;
    }

    IntPolynomial to_int_polynomial() const {
        if (!is_integral()) throw internal_error("polynomial has non-integer coefficients");
        std::vector<BigInt> c;
        c.reserve(c_.size());
        for (const auto& v : c_) c.emplace_back(numerator(v));
        return IntPolynomial(std::move(c));
    }

    bool operator==(const RatPolynomial& o) const = default;

    std::string to_string(const std::string& var = "q") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = degree(); d >= 0; --d) {
            const BigRat& v = c_[static_cast<size_t>(d)];
            if (v == 0) continue;
            if (!first) os << (v > 0 ? " + " : " - ");
            else if (v < 0) os << "-";
            BigRat a = abs(v);
            if (d == 0 || a != 1) os << a.str();
            if (d > 0) {
                if (a != 1) os << "*";
                os << var;
                if (d > 1) os << "^" << d;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigRat> c_;
};

/* Reduced quotient of two polynomials. The denominator is kept monic. */
struct RationalFunction {
    RatPolynomial num;
    RatPolynomial den = RatPolynomial::constant(1);

    RationalFunction() = default;
    RationalFunction(RatPolynomial n, RatPolynomial d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw usage_error("rational function with zero denominator");
        reduce();
    }

    static RationalFunction from_poly(RatPolynomial p) {
        return RationalFunction(std::move(p), RatPolynomial::constant(1));
    }

    bool is_polynomial() const { return den.degree() == 0; }

    /* Clears the constant denominator. */
    RatPolynomial as_polynomial() const {
        if (!is_polynomial()) throw internal_error("rational function is not a polynomial");
        return num * (BigRat(1) / den.coefficient(0));
    }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num * o.den + o.num * den, den * o.den);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num * o.den - o.num * den, den * o.den);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num * o.num, den * o.den);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.num.is_zero()) throw usage_error("division by zero rational function");
        return RationalFunction(num * o.den, den * o.num);
    }

    bool is_zero() const { return num.is_zero(); }

    bool operator==(const RationalFunction& o) const {
        return (num * o.den) == (o.num * den);
    }

    std::string to_string(const std::string& var = "q") const {
        if (is_polynomial()) return as_polynomial().to_string(var);
        return "(" + num.to_string(var) + ") / (" + den.to_string(var) + ")";
    }

private:
    void reduce() {
        if (num.is_zero()) {
            den = RatPolynomial::constant(1);
            return;
        }
        RatPolynomial g = RatPolynomial::gcd(num, den);
        if (g.degree() > 0) {
            num = num.divmod(g).first;
            den = den.divmod(g).first;
        }
        BigRat lead = den.coefficient(den.degree());
        num = num * (BigRat(1) / lead);
        den = den * (BigRat(1) / lead);
    }
};

} // namespace dlchi
