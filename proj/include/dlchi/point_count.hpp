#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "dlchi/bigint.hpp"
#include "dlchi/errors.hpp"
#include "dlchi/flag.hpp"
#include "dlchi/gf.hpp"
#include "dlchi/gf_matrix.hpp"
#include "dlchi/permutation.hpp"

namespace dlchi {

/* Worker count: explicit request wins, then the DLCHI_THREADS environment
   variable, then hardware concurrency. */
inline int resolve_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("DLCHI_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace detail {

inline uint64_t lex_rank_images(const int* img, int n) {
    uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<uint64_t>(i);
    uint64_t rank = 0;
    uint32_t used = 0;
    for (int i = 0; i < n; ++i) {
        fact /= static_cast<uint64_t>(n - i);
        int v = img[i];
        int smaller = __builtin_popcount(((1u << v) - 1) & ~used);
        rank += static_cast<uint64_t>(smaller) * fact;
        used |= 1u << v;
    }
    return rank;
}

/* Per-flag work: given the canonical basis F of a flag (pivots piv), form
   M = F^{-1} (g F) and take its pivot permutation, the relative position of
   (F, gF). The echelon structure of F lets F^{-1} act by back substitution
   in pivot order instead of a full elimination. n is capped at 8 so the
   workspaces can live on the stack. */
struct PositionKernel {
    const FiniteField& f;
    int n;
    const uint16_t* g; // row-major n*n
    uint16_t u[64];
    uint16_t m[64];
    int out_piv[8];

    PositionKernel(const FiniteField& field, int size, const uint16_t* g_data)
        : f(field), n(size), g(g_data) {
        if (n > 8) throw usage_error("point counting supports n <= 8");
    }

    uint64_t position_rank(const uint16_t* F, const int* piv) {
        // u = g * F
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                uint16_t acc = 0;
                for (int k = 0; k < n; ++k) {
                    uint16_t a = g[i * n + k];
                    if (a == 0) continue;
                    uint16_t b = F[k * n + j];
                    if (b == 0) continue;
                    acc = f.add(acc, f.mul(a, b));
                }
                u[i * n + j] = acc;
            }
        }
        // solve F m = u column by column; row piv[j] of F has a unit at
        // column j and zeros at all later columns
        for (int c = 0; c < n; ++c) {
            for (int j = 0; j < n; ++j) {
                uint16_t x = u[piv[j] * n + c];
                for (int k = 0; k < j; ++k) {
                    uint16_t fv = F[piv[j] * n + k];
                    if (fv == 0) continue;
                    uint16_t mv = m[k * n + c];
                    if (mv == 0) continue;
                    x = f.sub(x, f.mul(fv, mv));
                }
                m[j * n + c] = x;
            }
        }
        // pivot extraction of m
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < j; ++k) {
                uint16_t cval = m[out_piv[k] * n + j];
                if (cval == 0) continue;
                for (int i = 0; i < n; ++i) {
                    uint16_t kv = m[i * n + k];
                    if (kv == 0) continue;
                    m[i * n + j] = f.sub(m[i * n + j], f.mul(cval, kv));
                }
            }
            int p = -1;
            for (int i = n - 1; i >= 0; --i)
                if (m[i * n + j] != 0) { p = i; break; }
            if (p < 0) throw internal_error("relative position matrix is singular");
            out_piv[j] = p;
            uint16_t s = m[p * n + j];
            if (s != 1) {
                uint16_t si = f.inv(s);
                for (int i = 0; i <= p; ++i) m[i * n + j] = f.mul(m[i * n + j], si);
            }
        }
        return lex_rank_images(out_piv, n);
    }
};

} // namespace detail

/* Relative positions of (F, gF) over all flags F at once, bucketed by
   permutation in lexicographic rank order. */
struct PositionCounts {
    int n = 0;
    uint32_t q = 0;
    std::vector<uint64_t> by_rank;

    uint64_t at(const PermutationW& w) const {
        if (w.n() != n) throw usage_error("permutation size does not match the counts");
        return by_rank[lex_rank(w)];
    }

    BigInt total() const {
        BigInt t = 0;
        for (uint64_t v : by_rank) t += v;
        return t;
    }
};

inline PositionCounts count_all_positions(const MatrixGF& g,
                                          uint64_t flag_budget = kDefaultFlagBudget,
                                          int threads = 0) {
    const FiniteField& f = g.field();
    int n = g.rows();
    if (g.cols() != n) throw usage_error("group element must be square");
    if (!g.invertible()) throw usage_error("group element must be invertible");
    BigInt total = flag_count(n, f.order());
    if (total > flag_budget)
        throw resource_error("flag count " + total.str() + " over GF(" +
                             std::to_string(f.order()) + ") exceeds budget " +
                             std::to_string(flag_budget));

    std::vector<PermutationW> perms = all_permutations(n);
    size_t nperm = perms.size();

    // jobs slice each cell by the value of its first free coordinate
    struct Job {
        size_t perm;
        int fixed;
    };
    std::vector<Job> jobs;
    for (size_t pi = 0; pi < nperm; ++pi) {
        if (perms[pi].length() == 0) {
            jobs.push_back({pi, -1});
        } else {
            for (uint32_t v = 0; v < f.order(); ++v) jobs.push_back({pi, static_cast<int>(v)});
        }
    }

    int nthreads = resolve_threads(threads);
    if (nthreads > static_cast<int>(jobs.size())) nthreads = static_cast<int>(jobs.size());
    if (nthreads < 1) nthreads = 1;

    std::vector<std::vector<uint64_t>> partial(
        static_cast<size_t>(nthreads), std::vector<uint64_t>(nperm, 0));
    std::atomic<size_t> next{0};

    auto worker = [&](int tid) {
        detail::PositionKernel kernel(f, n, g.data().data());
        std::vector<uint64_t>& counts = partial[static_cast<size_t>(tid)];
        for (;;) {
            size_t j = next.fetch_add(1);
            if (j >= jobs.size()) break;
            const Job& job = jobs[j];
            const std::vector<int>& piv = perms[job.perm].images();
            detail::for_each_cell_flag(f, piv, job.fixed, [&](const uint16_t* data) {
                ++counts[kernel.position_rank(data, piv.data())];
            });
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    PositionCounts out;
    out.n = n;
    out.q = f.order();
    out.by_rank.assign(nperm, 0);
    for (const auto& c : partial)
        for (size_t i = 0; i < nperm; ++i) out.by_rank[i] += c[i];
    if (out.total() != total)
        throw internal_error("relative position counts do not add up to the flag count");
    return out;
}

/* |{F : F --w--> gF}|, the point count of the twisted variety. */
inline uint64_t count_Y(const PermutationW& w, const MatrixGF& g,
                        uint64_t flag_budget = kDefaultFlagBudget, int threads = 0) {
    if (w.n() != g.rows()) throw usage_error("w and g have different sizes");
    return count_all_positions(g, flag_budget, threads).at(w);
}

} // namespace dlchi
