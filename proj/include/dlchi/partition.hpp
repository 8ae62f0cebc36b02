#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dlchi/bigint.hpp"
#include "dlchi/errors.hpp"

namespace dlchi {

/* Weakly decreasing sequence of positive integers. Carrier for cycle types,
   Jordan block profiles and symmetric function indices. Parts are stored
   sorted, so two partitions compare equal iff they are the same multiset. */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0) throw usage_error("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    int multiplicity(int value) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
    }

    Partition conjugate() const {
        std::vector<int> c;
        // parts_ is sorted descending, so column heights are found left to right
        for (int col = 1; !parts_.empty() && col <= parts_[0]; ++col) {
            int h = 0;
            for (int p : parts_) {
                if (p >= col) ++h; else break;
            }
            c.push_back(h);
        }
        return Partition(std::move(c));
    }

    /* Product of factorials of the parts. */
    BigInt factorial_product() const {
        BigInt r = 1;
        for (int p : parts_) r *= big_factorial(p);
        return r;
    }

    /* Order of the centralizer of a permutation with this cycle type:
       prod_v v^{m_v} * m_v! over distinct part values v. */
    BigInt centralizer_order() const {
        BigInt r = 1;
        size_t i = 0;
        while (i < parts_.size()) {
            size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            int m = static_cast<int>(j - i);
            for (int t = 0; t < m; ++t) r *= parts_[i];
            r *= big_factorial(m);
            i = j;
        }
        return r;
    }

    /* n(lambda) = sum_i (i-1) * lambda_i, the partition statistic that
       shows up as the degree of the associated q-polynomials. */
    int n_stat() const {
        int s = 0;
        for (size_t i = 0; i < parts_.size(); ++i) s += static_cast<int>(i) * parts_[i];
        return s;
    }

    bool operator==(const Partition& o) const = default;
    auto operator<=>(const Partition& o) const = default;

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ')';
        return os.str();
    }

    /* Bare comma-separated parts, the CLI input syntax. */
    std::string plain_string() const {
        std::string s = to_string();
        return s.substr(1, s.size() - 2);
    }

private:
    std::vector<int> parts_;
};

/* "3,2,2,1" or "(3,2,2,1)", whitespace tolerated. */
inline Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
    std::vector<int> parts;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) throw usage_error("empty part in partition '" + text + "'");
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw usage_error("bad partition part '" + tok + "'");
            }
            if (pos != tok.size()) throw usage_error("bad partition part '" + tok + "'");
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

/* All partitions of n in reverse lexicographic order:
   (n) first, (1,...,1) last. */
inline std::vector<Partition> all_partitions(int n) {
    if (n < 0) throw usage_error("all_partitions needs n >= 0");
    if (n == 0) return {Partition{}};
    std::vector<Partition> out;
    std::vector<int> a{n};
    for (;;) {
        out.push_back(Partition(a));
        int k = static_cast<int>(a.size()) - 1;
        while (k >= 0 && a[k] == 1) --k;
        if (k < 0) break;
        int trailing_ones = static_cast<int>(a.size()) - 1 - k;
        int val = a[k] - 1;
        a.resize(static_cast<size_t>(k));
        a.push_back(val);
        int remaining = trailing_ones + 1;
        while (remaining > val) {
            a.push_back(val);
            remaining -= val;
        }
        if (remaining > 0) a.push_back(remaining);
    }
    return out;
}

} // namespace dlchi
