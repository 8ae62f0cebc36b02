#pragma once

#include <cstdint>
#include <deque>
#include <unordered_set>
#include <vector>

#include "dlchi/bigint.hpp"
#include "dlchi/errors.hpp"
#include "dlchi/partition.hpp"
#include "dlchi/permutation.hpp"

namespace dlchi {

inline constexpr uint64_t kDefaultCosetBudget = 5000000;

/* Value at w of the character of S_n induced from the trivial character of
   the parabolic S_lambda (consecutive blocks): the number of cosets v*S_lambda
   fixed by left multiplication by w, i.e. with v^-1 w v inside S_lambda.

   Cosets are walked breadth-first from the identity coset. The canonical
   coset representative sorts the one-line word inside each block, and reps
   are packed four bits per letter, which caps this routine at n <= 16. The
   real bound is the coset budget. */
inline BigInt induced_trivial_value(const Partition& lambda, const PermutationW& w,
                                    uint64_t coset_budget = kDefaultCosetBudget) {
    int n = lambda.weight();
    if (w.n() != n) throw usage_error("w must be a permutation of the weight of lambda");
    if (n > 16) throw usage_error("induced_trivial_value supports n <= 16");
    if (n == 0) return 1;

    BigInt cosets = big_factorial(n) / lambda.factorial_product();
    if (cosets > coset_budget)
        throw resource_error("induced_trivial_value: " + cosets.str() +
                             " cosets exceed budget " + std::to_string(coset_budget));

    std::vector<int> block_of(static_cast<size_t>(n));
    {
        int pos = 0, b = 0;
        for (int p : lambda.parts()) {
            for (int t = 0; t < p; ++t) block_of[static_cast<size_t>(pos++)] = b;
            ++b;
        }
    }
    std::vector<std::pair<int, int>> block_ranges;
    {
        int pos = 0;
        for (int p : lambda.parts()) {
            block_ranges.emplace_back(pos, pos + p);
            pos += p;
        }
    }

    auto canonicalize = [&](std::vector<int>& v) {
        for (auto [lo, hi] : block_ranges)
            std::sort(v.begin() + lo, v.begin() + hi);
    };
    auto encode = [&](const std::vector<int>& v) {
        uint64_t key = 0;
        for (int i = 0; i < n; ++i) key |= static_cast<uint64_t>(v[static_cast<size_t>(i)]) << (4 * i);
        return key;
    };
    auto decode = [&](uint64_t key) {
        std::vector<int> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = static_cast<int>((key >> (4 * i)) & 0xF);
        return v;
    };

    const std::vector<int>& wim = w.images();
    // fixed coset test: positions of x and w(x) in v fall in the same block
    auto is_fixed = [&](const std::vector<int>& v) {
        std::vector<int> pos(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<size_t>(v[static_cast<size_t>(i)])] = i;
        for (int x = 0; x < n; ++x)
            if (block_of[static_cast<size_t>(pos[static_cast<size_t>(wim[static_cast<size_t>(x)])])] !=
                block_of[static_cast<size_t>(pos[static_cast<size_t>(x)])])
                return false;
        return true;
    };

    std::vector<int> start(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) start[static_cast<size_t>(i)] = i;
    canonicalize(start);

    std::unordered_set<uint64_t> seen;
    seen.reserve(static_cast<size_t>(cosets.convert_to<uint64_t>() * 2));
    std::deque<uint64_t> queue;
    uint64_t start_key = encode(start);
    seen.insert(start_key);
    queue.push_back(start_key);

    BigInt fixed = 0;
    while (!queue.empty()) {
        uint64_t key = queue.front();
        queue.pop_front();
        std::vector<int> v = decode(key);
        if (is_fixed(v)) ++fixed;
        for (int i = 0; i + 1 < n; ++i) {
            std::vector<int> u = v;
            // left multiplication by the transposition (i, i+1) swaps values
            for (int j = 0; j < n; ++j) {
                if (u[static_cast<size_t>(j)] == i) u[static_cast<size_t>(j)] = i + 1;
                else if (u[static_cast<size_t>(j)] == i + 1) u[static_cast<size_t>(j)] = i;
            }
            canonicalize(u);
            uint64_t uk = encode(u);
            if (seen.insert(uk).second) queue.push_back(uk);
        }
    }
    if (BigInt(static_cast<unsigned long long>(seen.size())) != cosets)
        throw internal_error("coset walk visited wrong number of cosets");
    return fixed;
}

inline BigInt induced_trivial_value(const Partition& lambda, const Partition& rho,
                                    uint64_t coset_budget = kDefaultCosetBudget) {
    if (rho.weight() != lambda.weight())
        throw usage_error("rho and lambda must have equal weight");
    return induced_trivial_value(lambda, PermutationW::class_representative(rho), coset_budget);
}

} // namespace dlchi
