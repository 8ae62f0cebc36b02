#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dlchi/errors.hpp"
#include "dlchi/partition.hpp"

namespace dlchi {

/* Element of the symmetric group S_n, stored as 0-based images.
   Composition is right-to-left: (u*v)(i) = u(v(i)). */
class PermutationW {
public:
    PermutationW() = default;

    explicit PermutationW(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)])
                throw usage_error("permutation images must be a bijection on 0..n-1");
            seen[static_cast<size_t>(v)] = 1;
        }
    }

    static PermutationW identity(int n) {
        std::vector<int> im(static_cast<size_t>(n));
        std::iota(im.begin(), im.end(), 0);
        return PermutationW(std::move(im));
    }

    /* Simple transposition s_i swapping i and i+1, i in 1..n-1. */
    static PermutationW simple(int n, int i) {
        if (i < 1 || i >= n) throw usage_error("simple reflection index out of range");
        PermutationW w = identity(n);
        std::swap(w.img_[static_cast<size_t>(i - 1)], w.img_[static_cast<size_t>(i)]);
        return w;
    }

    /* Cycles given with 1-based entries, e.g. {{1,2},{3,4}} in S_4. */
    static PermutationW from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        PermutationW w = identity(n);
        std::vector<char> used(static_cast<size_t>(n), 0);
        for (const auto& cyc : cycles) {
            for (int v : cyc) {
                if (v < 1 || v > n) throw usage_error("cycle entry out of range 1..n");
                if (used[static_cast<size_t>(v - 1)]) throw usage_error("repeated entry in cycles");
                used[static_cast<size_t>(v - 1)] = 1;
            }
            for (size_t j = 0; j < cyc.size(); ++j)
                w.img_[static_cast<size_t>(cyc[j] - 1)] = cyc[(j + 1) % cyc.size()] - 1;
        }
        return w;
    }

    /* Canonical representative of the class with cycle type rho: consecutive
       cycles (1..rho_1)(rho_1+1..rho_1+rho_2)... */
    static PermutationW class_representative(const Partition& rho) {
        int n = rho.weight();
        std::vector<std::vector<int>> cycles;
        int next = 1;
        for (int p : rho.parts()) {
            std::vector<int> cyc(static_cast<size_t>(p));
            std::iota(cyc.begin(), cyc.end(), next);
            next += p;
            cycles.push_back(std::move(cyc));
        }
        return from_cycles(n, cycles);
    }

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    /* 1-based one-line notation. */
    std::vector<int> one_line() const {
        std::vector<int> v(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) v[i] = img_[i] + 1;
        return v;
    }

    PermutationW operator*(const PermutationW& v) const {
        if (n() != v.n()) throw usage_error("composing permutations of different sizes");
        std::vector<int> im(img_.size());
        for (size_t i = 0; i < img_.size(); ++i)
            im[i] = img_[static_cast<size_t>(v.img_[i])];
        return PermutationW(std::move(im));
    }

    PermutationW inverse() const {
        std::vector<int> im(img_.size());
        for (size_t i = 0; i < img_.size(); ++i)
            im[static_cast<size_t>(img_[i])] = static_cast<int>(i);
        return PermutationW(std::move(im));
    }

    /* Coxeter length = inversion count. */
    int length() const {
        int l = 0;
        for (size_t i = 0; i < img_.size(); ++i)
            for (size_t j = i + 1; j < img_.size(); ++j)
                if (img_[i] > img_[j]) ++l;
        return l;
    }

    bool is_identity() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    Partition cycle_type() const {
        std::vector<char> seen(img_.size(), 0);
        std::vector<int> lens;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            size_t j = i;
            while (!seen[j]) {
                seen[j] = 1;
                j = static_cast<size_t>(img_[j]);
                ++len;
            }
            lens.push_back(len);
        }
        return Partition(std::move(lens));
    }

    bool operator==(const PermutationW& o) const = default;
    auto operator<=>(const PermutationW& o) const = default;

    /* Cycle notation with fixed points omitted; "id" for the identity. */
    std::string cycle_string() const {
        std::vector<char> seen(img_.size(), 0);
        std::ostringstream os;
        bool any = false;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == static_cast<int>(i)) { seen[i] = 1; continue; }
            os << '(';
            size_t j = i;
            bool first = true;
            while (!seen[j]) {
                if (!first) os << ' ';
                os << (j + 1);
                seen[j] = 1;
                first = false;
                j = static_cast<size_t>(img_[j]);
            }
            os << ')';
            any = true;
        }
        return any ? os.str() : std::string("id");
    }

private:
    std::vector<int> img_;
};

/* Parses "(1 2)(3 4)", "(1,2)", or "id". Entries are 1-based. */
inline PermutationW parse_cycles(int n, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "id" || s == "e" || s == "()") return PermutationW::identity(n);
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '(') throw usage_error("expected '(' in cycle notation: " + text);
        size_t close = s.find(')', i);
        if (close == std::string::npos) throw usage_error("unbalanced cycle notation: " + text);
        std::string body = s.substr(i + 1, close - i - 1);
        std::vector<int> cyc;
        std::string tok;
        // entries may be separated by commas; with none, single digits are assumed
        if (body.find(',') != std::string::npos) {
            std::istringstream is(body);
            while (std::getline(is, tok, ','))
                cyc.push_back(std::stoi(tok));
        } else {
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw usage_error("bad cycle entry in: " + text);
                cyc.push_back(c - '0');
            }
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        i = close + 1;
    }
    return PermutationW::from_cycles(n, cycles);
}

/* All of S_n in lexicographic order of one-line notation. */
inline std::vector<PermutationW> all_permutations(int n) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    std::vector<PermutationW> out;
    do {
        out.push_back(PermutationW(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

/* Index of w in the lexicographic enumeration, via the factorial base. */
inline uint64_t lex_rank(const PermutationW& w) {
    int n = w.n();
    uint64_t rank = 0;
    uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<uint64_t>(i);
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (n - i > 0) fact /= static_cast<uint64_t>(n - i);
        int smaller = 0;
        for (int v = 0; v < w(i); ++v)
            if (!used[static_cast<size_t>(v)]) ++smaller;
        rank += static_cast<uint64_t>(smaller) * fact;
        used[static_cast<size_t>(w(i))] = 1;
    }
    return rank;
}

} // namespace dlchi
