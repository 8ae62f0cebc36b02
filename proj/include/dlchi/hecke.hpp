#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dlchi/errors.hpp"
#include "dlchi/flag.hpp"
#include "dlchi/gf.hpp"
#include "dlchi/gf_matrix.hpp"
#include "dlchi/permutation.hpp"
#include "dlchi/point_count.hpp"

namespace dlchi {

/* Matrix truth of the Hecke relations, computed on the permutation module
   spanned by all flags: (T_w)_{F',F} = 1 iff F' and F are in relative
   position w. Everything here materializes N x N integer matrices with
   N the number of flags, so the domain is deliberately small. */
inline constexpr uint64_t kDefaultHeckeFlagLimit = 512;

namespace detail {

using DenseInt = std::vector<int64_t>; // row-major square

inline DenseInt dense_mul(const DenseInt& a, const DenseInt& b, size_t n) {
    DenseInt r(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            int64_t v = a[i * n + k];
            if (v == 0) continue;
            for (size_t j = 0; j < n; ++j) r[i * n + j] += v * b[k * n + j];
        }
    return r;
}

} // namespace detail

/* Flag basis with the full pairwise relative position table. */
class HeckeModule {
public:
    HeckeModule(int n, const FiniteField& f, uint64_t flag_limit = kDefaultHeckeFlagLimit)
        : n_(n), f_(&f), flags_(all_flags(n, f, flag_limit)) {
        size_t N = flags_.size();
        index_.clear();
        for (size_t i = 0; i < N; ++i) index_.emplace(flags_[i].basis().data(), i);
        pos_rank_.assign(N * N, 0);
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j)
                pos_rank_[i * N + j] = static_cast<uint32_t>(
                    lex_rank(relative_position(flags_[i], flags_[j])));
    }

    int n() const { return n_; }
    const FiniteField& field() const { return *f_; }
    size_t size() const { return flags_.size(); }
    const std::vector<Flag>& flags() const { return flags_; }

    detail::DenseInt t_matrix(const PermutationW& w) const {
        size_t N = flags_.size();
        uint32_t r = static_cast<uint32_t>(lex_rank(w));
        detail::DenseInt t(N * N, 0);
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j)
                if (pos_rank_[i * N + j] == r) t[i * N + j] = 1;
        return t;
    }

    /* Permutation matrix of the left translation F -> gF. */
    detail::DenseInt g_matrix(const MatrixGF& g) const {
        size_t N = flags_.size();
        detail::DenseInt p(N * N, 0);
        for (size_t j = 0; j < N; ++j) {
            Flag gf = apply_matrix(g, flags_[j]);
            auto it = index_.find(gf.basis().data());
            if (it == index_.end()) throw internal_error("translated flag not found");
            p[it->second * N + j] = 1;
        }
        return p;
    }

private:
    int n_;
    const FiniteField* f_;
    std::vector<Flag> flags_;
    std::map<std::vector<uint16_t>, size_t> index_;
    std::vector<uint32_t> pos_rank_;
};

struct HeckeRelationsReport {
    int n = 0;
    uint32_t q = 0;
    size_t flags = 0;
    bool quadratic_ok = true;
    bool braid_ok = true;
    bool commuting_ok = true;
    bool length_additive_ok = true;
    std::vector<std::string> failures;

    bool ok() const { return quadratic_ok && braid_ok && commuting_ok && length_additive_ok; }
};

/* Verifies, with q the field order and N the flag count:
     - T_s^2 = (q-1) T_s + q I for every simple reflection,
     - the braid and commuting relations among the T_s,
     - T_u T_v = T_{uv} whenever l(uv) = l(u) + l(v). */
inline HeckeRelationsReport hecke_relations_check(int n, const FiniteField& f,
                                                  uint64_t flag_limit = kDefaultHeckeFlagLimit) {
    HeckeModule mod(n, f, flag_limit);
    size_t N = mod.size();
    int64_t q = f.order();
    HeckeRelationsReport rep;
    rep.n = n;
    rep.q = f.order();
    rep.flags = N;

    std::vector<PermutationW> perms = all_permutations(n);
    std::vector<detail::DenseInt> t;
    t.reserve(perms.size());
    for (const PermutationW& w : perms) t.push_back(mod.t_matrix(w));

    auto tm = [&](const PermutationW& w) -> const detail::DenseInt& {
        return t[lex_rank(w)];
    };

    for (int i = 1; i < n; ++i) {
        PermutationW s = PermutationW::simple(n, i);
        detail::DenseInt lhs = detail::dense_mul(tm(s), tm(s), N);
        detail::DenseInt rhs(N * N, 0);
        for (size_t a = 0; a < N * N; ++a) rhs[a] = (q - 1) * tm(s)[a];
        for (size_t a = 0; a < N; ++a) rhs[a * N + a] += q;
        if (lhs != rhs) {
            rep.quadratic_ok = false;
            rep.failures.push_back("quadratic relation fails at s_" + std::to_string(i));
        }
    }

    for (int i = 1; i + 1 < n; ++i) {
        PermutationW a = PermutationW::simple(n, i);
        PermutationW b = PermutationW::simple(n, i + 1);
        detail::DenseInt lhs = detail::dense_mul(detail::dense_mul(tm(a), tm(b), N), tm(a), N);
        detail::DenseInt rhs = detail::dense_mul(detail::dense_mul(tm(b), tm(a), N), tm(b), N);
        if (lhs != rhs) {
            rep.braid_ok = false;
            rep.failures.push_back("braid relation fails at s_" + std::to_string(i));
        }
    }

    for (int i = 1; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            PermutationW a = PermutationW::simple(n, i);
            PermutationW b = PermutationW::simple(n, j);
            detail::DenseInt lhs = detail::dense_mul(tm(a), tm(b), N);
            detail::DenseInt rhs = detail::dense_mul(tm(b), tm(a), N);
            if (lhs != rhs) {
                rep.commuting_ok = false;
                rep.failures.push_back("commuting relation fails at s_" + std::to_string(i) +
                                       ", s_" + std::to_string(j));
            }
        }
    }

    for (const PermutationW& u : perms) {
        for (const PermutationW& v : perms) {
            PermutationW uv = u * v;
            if (uv.length() != u.length() + v.length()) continue;
            detail::DenseInt lhs = detail::dense_mul(tm(u), tm(v), N);
            if (lhs != tm(uv)) {
                rep.length_additive_ok = false;
                rep.failures.push_back("T_u T_v != T_uv at u=" + u.cycle_string() +
                                       " v=" + v.cycle_string());
            }
        }
    }
    return rep;
}

struct TraceIdentityReport {
    PermutationW w;
    int64_t trace = 0;
    uint64_t count = 0;
    bool ok = false;
};

/* trace(T_w P_g) computed with explicit matrices must equal the direct
   point count of the twisted variety. */
inline TraceIdentityReport trace_identity_check(const PermutationW& w, const MatrixGF& g,
                                                uint64_t flag_limit = kDefaultHeckeFlagLimit) {
    HeckeModule mod(w.n(), g.field(), flag_limit);
    size_t N = mod.size();
    detail::DenseInt prod = detail::dense_mul(mod.t_matrix(w), mod.g_matrix(g), N);
    int64_t trace = 0;
    for (size_t i = 0; i < N; ++i) trace += prod[i * N + i];
    TraceIdentityReport rep;
    rep.w = w;
    rep.trace = trace;
    rep.count = count_Y(w, g);
    rep.ok = trace >= 0 && static_cast<uint64_t>(trace) == rep.count;
    return rep;
}

} // namespace dlchi
