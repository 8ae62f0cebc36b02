#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dlchi/bigint.hpp"
#include "dlchi/errors.hpp"
#include "dlchi/partition.hpp"

namespace dlchi {

/* A map zeta from the parts of rho onto the parts of lambda such that the
   preimage of each lambda part sums to exactly that part. target[j] is the
   0-based index of the lambda part receiving rho part j. */
struct AssignmentMap {
    Partition rho;
    Partition lambda;
    std::vector<int> target;

    AssignmentMap(Partition r, Partition l, std::vector<int> t)
        : rho(std::move(r)), lambda(std::move(l)), target(std::move(t)) {
        if (static_cast<int>(target.size()) != rho.num_parts())
            throw usage_error("assignment map must cover every source part");
        std::vector<int> got(static_cast<size_t>(lambda.num_parts()), 0);
        for (size_t j = 0; j < target.size(); ++j) {
            int i = target[j];
            if (i < 0 || i >= lambda.num_parts())
                throw usage_error("assignment target index out of range");
            got[static_cast<size_t>(i)] += rho.part(static_cast<int>(j));
        }
        for (int i = 0; i < lambda.num_parts(); ++i)
            if (got[static_cast<size_t>(i)] != lambda.part(i))
                throw usage_error("assignment does not fill its targets exactly");
    }

    std::string to_string() const {
        std::ostringstream os;
        for (size_t j = 0; j < target.size(); ++j) {
            if (j) os << ' ';
            os << rho.part(static_cast<int>(j)) << "->" << (target[j] + 1);
        }
        return os.str();
    }
};

namespace detail {

/* Shared DFS over target sequences in lexicographic order. rho parts are
   assigned in stored (descending) order; at depth j every feasible target
   index is tried in increasing order. */
template <class Visit>
void assignment_dfs(const Partition& rho, const Partition& lambda, Visit&& visit) {
    if (rho.weight() != lambda.weight())
        throw usage_error("rho and lambda must have equal weight");
    int s = rho.num_parts();
    int r = lambda.num_parts();
    std::vector<int> remaining(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) remaining[static_cast<size_t>(i)] = lambda.part(i);
    std::vector<int> target(static_cast<size_t>(s), -1);
    std::function<void(int)> rec = [&](int j) {
        if (j == s) {
            visit(target);
            return;
        }
        int p = rho.part(j);
        for (int i = 0; i < r; ++i) {
            if (remaining[static_cast<size_t>(i)] < p) continue;
            remaining[static_cast<size_t>(i)] -= p;
            target[static_cast<size_t>(j)] = i;
            rec(j + 1);
            remaining[static_cast<size_t>(i)] += p;
        }
        target[static_cast<size_t>(j)] = -1;
    };
    rec(0);
}

} // namespace detail

/* All assignment maps, ordered lexicographically by target sequence. */
inline std::vector<AssignmentMap> enumerate_P(const Partition& rho, const Partition& lambda) {
    std::vector<AssignmentMap> out;
    detail::assignment_dfs(rho, lambda, [&](const std::vector<int>& target) {
        out.emplace_back(rho, lambda, target);
    });
    return out;
}

/* |P(rho, lambda)|, counted by the same traversal without materializing. */
inline BigInt x_count(const Partition& rho, const Partition& lambda) {
    BigInt count = 0;
    detail::assignment_dfs(rho, lambda, [&](const std::vector<int>&) { ++count; });
    return count;
}

/* Assignment map up to reordering parts of equal size on either side:
   a multiset of blocks, one block per lambda part, each block recording the
   lambda part value and the multiset of rho parts sent to it. */
struct UnorderedAssignment {
    // each block: (lambda part value, rho parts assigned to it, sorted desc)
    std::vector<std::pair<int, std::vector<int>>> blocks;

    bool operator==(const UnorderedAssignment& o) const = default;
    auto operator<=>(const UnorderedAssignment& o) const = default;

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (b) os << ", ";
            os << blocks[b].first << "<-[";
            for (size_t j = 0; j < blocks[b].second.size(); ++j) {
                if (j) os << ',';
                os << blocks[b].second[j];
            }
            os << ']';
        }
        os << '}';
        return os.str();
    }
};

inline UnorderedAssignment collapse(const AssignmentMap& m) {
    UnorderedAssignment u;
    u.blocks.resize(static_cast<size_t>(m.lambda.num_parts()));
    for (int i = 0; i < m.lambda.num_parts(); ++i)
        u.blocks[static_cast<size_t>(i)].first = m.lambda.part(i);
    for (size_t j = 0; j < m.target.size(); ++j)
        u.blocks[static_cast<size_t>(m.target[j])].second.push_back(m.rho.part(static_cast<int>(j)));
    for (auto& b : u.blocks)
        std::sort(b.second.begin(), b.second.end(), std::greater<int>());
    std::sort(u.blocks.begin(), u.blocks.end(), std::greater<std::pair<int, std::vector<int>>>());
    return u;
}

/* Distinct collapse classes with their fiber sizes, in order of first
   appearance in enumerate_P. */
inline std::vector<std::pair<UnorderedAssignment, BigInt>>
collapse_classes(const Partition& rho, const Partition& lambda) {
    std::vector<std::pair<UnorderedAssignment, BigInt>> out;
    detail::assignment_dfs(rho, lambda, [&](const std::vector<int>& target) {
        UnorderedAssignment u = collapse(AssignmentMap(rho, lambda, target));
        for (auto& kv : out) {
            if (kv.first == u) {
                ++kv.second;
                return;
            }
        }
        out.emplace_back(std::move(u), 1);
    });
    return out;
}

/* Recursive evaluation of the assignment count: place the largest rho part
   into each lambda part big enough to hold it, subtract, and recurse on the
   smaller pair. Base case: both empty. */
inline BigInt x_recursive(const Partition& rho, const Partition& lambda) {
    if (rho.weight() != lambda.weight())
        throw usage_error("rho and lambda must have equal weight");
    if (rho.empty()) return 1;
    int p = rho.part(0);
    std::vector<int> rho_rest(rho.parts().begin() + 1, rho.parts().end());
    Partition rest(std::move(rho_rest));
    BigInt total = 0;
    for (int i = 0; i < lambda.num_parts(); ++i) {
        if (lambda.part(i) < p) continue;
        std::vector<int> next;
        next.reserve(static_cast<size_t>(lambda.num_parts()));
        for (int t = 0; t < lambda.num_parts(); ++t) {
            int v = (t == i) ? lambda.part(t) - p : lambda.part(t);
            if (v > 0) next.push_back(v);
        }
        total += x_recursive(rest, Partition(std::move(next)));
    }
    return total;
}

} // namespace dlchi
