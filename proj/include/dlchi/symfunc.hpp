#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dlchi/bigint.hpp"
#include "dlchi/errors.hpp"
#include "dlchi/partition.hpp"

namespace dlchi {

/* Symmetric function of fixed degree, stored as a monomial-basis expansion.
   Zero coefficients are never stored. */
class SymmetricFunction {
public:
    explicit SymmetricFunction(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Partition, BigInt>& coefficients() const { return coeffs_; }

    BigInt coefficient(const Partition& mu) const {
        auto it = coeffs_.find(mu);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    void add_term(const Partition& mu, const BigInt& c) {
        if (mu.weight() != degree_)
            throw usage_error("monomial term of wrong degree");
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(mu, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // iterate largest partition first for readability
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            if (!first) os << " + ";
            if (it->second != 1) os << it->second.str() << "*";
            os << "m" << it->first.to_string();
            first = false;
        }
        return os.str();
    }

private:
    int degree_;
    std::map<Partition, BigInt> coeffs_;
};

/* Multiplies a power sum p_k into a monomial expansion. Adding k to the
   part value s of mu (or appending a new part, s = 0) yields nu; the
   coefficient picked up is the multiplicity of s + k in nu, because each
   monomial of m_nu arises from choosing which copy of the value s + k
   absorbed the variable power contributed by p_k. */
inline SymmetricFunction multiply_power(int k, const SymmetricFunction& f) {
    if (k <= 0) throw usage_error("power sum index must be positive");
    SymmetricFunction out(f.degree() + k);
    for (const auto& [mu, c] : f.coefficients()) {
        std::vector<int> values{0};
        for (int p : mu.parts())
            if (values.back() != p) values.push_back(p);
        for (int s : values) {
            std::vector<int> parts = mu.parts();
            if (s == 0) {
                parts.push_back(k);
            } else {
                for (auto& p : parts) {
                    if (p == s) { p = s + k; break; }
                }
            }
            Partition nu(std::move(parts));
            out.add_term(nu, c * nu.multiplicity(s + k));
        }
    }
    return out;
}

/* Monomial expansion of the power sum product p_rho. */
inline SymmetricFunction power_to_monomial(const Partition& rho) {
    SymmetricFunction f(0);
    f.add_term(Partition{}, 1);
    for (int k : rho.parts()) f = multiply_power(k, f);
    return f;
}

/* Monomial expansion of a single complete homogeneous function h_k:
   every monomial of degree k appears once. */
inline SymmetricFunction homogeneous_to_monomial(int k) {
    SymmetricFunction f(k);
    for (const Partition& mu : all_partitions(k)) f.add_term(mu, 1);
    return f;
}

/* Hall pairing <p_rho, h_lambda>. Under <h, m> duality this is the
   coefficient of m_lambda in the monomial expansion of p_rho. */
inline BigInt scalar_product_ph(const Partition& rho, const Partition& lambda) {
    if (rho.weight() != lambda.weight())
        throw usage_error("rho and lambda must have equal weight");
    return power_to_monomial(rho).coefficient(lambda);
}

} // namespace dlchi
