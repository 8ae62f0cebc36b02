#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dlchi/assignment.hpp"
#include "dlchi/errors.hpp"
#include "dlchi/gf.hpp"
#include "dlchi/gf_matrix.hpp"
#include "dlchi/partition.hpp"

namespace dlchi {

/* Conjugacy data for a matrix with eigenvalues in the ground field: one
   slot per eigenvalue, each carrying the partition of its Jordan block
   sizes. Which eigenvalue is which is not part of the data, so slots are
   kept in a canonical order: by weight, then by partition, descending. */
struct GroupElementSpec {
    std::vector<Partition> slots;

    GroupElementSpec() = default;

    explicit GroupElementSpec(std::vector<Partition> s) : slots(std::move(s)) {
        for (const Partition& p : slots)
            if (p.empty()) throw usage_error("group element slots must be nonempty");
        std::sort(slots.begin(), slots.end(), [](const Partition& a, const Partition& b) {
            if (a.weight() != b.weight()) return a.weight() > b.weight();
            return a > b;
        });
    }

    int n() const {
        int s = 0;
        for (const Partition& p : slots) s += p.weight();
        return s;
    }

    int num_slots() const { return static_cast<int>(slots.size()); }

    /* Total Jordan type: all block sizes across slots. */
    Partition lambda() const {
        std::vector<int> parts;
        for (const Partition& p : slots)
            parts.insert(parts.end(), p.parts().begin(), p.parts().end());
        return Partition(std::move(parts));
    }

    /* Multiplicity type: one part per slot, its weight. */
    Partition lambda_prime() const {
        std::vector<int> parts;
        for (const Partition& p : slots) parts.push_back(p.weight());
        return Partition(std::move(parts));
    }

    /* The induced unordered assignment in [P(lambda, lambda_prime)]: each
       slot weight receives that slot's block sizes. */
    UnorderedAssignment grouping() const {
        UnorderedAssignment u;
        for (const Partition& p : slots) u.blocks.emplace_back(p.weight(), p.parts());
        std::sort(u.blocks.begin(), u.blocks.end(),
                  std::greater<std::pair<int, std::vector<int>>>());
        return u;
    }

    bool operator==(const GroupElementSpec& o) const = default;
    auto operator<=>(const GroupElementSpec& o) const = default;

    /* Slot partitions joined with '|': "2,1|1" is J_2 + J_1 at one
       eigenvalue and J_1 at another. */
    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < slots.size(); ++i) {
            if (i) os << '|';
            os << slots[i].plain_string();
        }
        return os.str();
    }
};

inline GroupElementSpec parse_spec(const std::string& text) {
    std::vector<Partition> slots;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, '|')) slots.push_back(parse_partition(cur));
    if (slots.empty()) throw usage_error("empty group element spec");
    return GroupElementSpec(std::move(slots));
}

/* Every spec of total size n, deduplicated up to slot order. Outer order
   follows lambda_prime through all_partitions(n); inner order is the
   product of per-slot partition lists. */
inline std::vector<GroupElementSpec> all_specs(int n) {
    std::vector<GroupElementSpec> out;
    std::set<std::vector<Partition>> seen;
    for (const Partition& lp : all_partitions(n)) {
        std::vector<std::vector<Partition>> choices;
        for (int i = 0; i < lp.num_parts(); ++i) choices.push_back(all_partitions(lp.part(i)));
        std::vector<size_t> idx(choices.size(), 0);
        bool done = false;
        while (!done) {
            std::vector<Partition> slots;
            for (size_t s = 0; s < choices.size(); ++s) slots.push_back(choices[s][idx[s]]);
            GroupElementSpec spec(std::move(slots));
            if (seen.insert(spec.slots).second) out.push_back(std::move(spec));
            done = true;
            for (size_t d = choices.size(); d-- > 0;) {
                if (++idx[d] < choices[d].size()) { done = false; break; }
                idx[d] = 0;
            }
        }
    }
    return out;
}

/* Block diagonal matrix with one upper Jordan block J_m(e_s) per part m of
   each slot, slots in canonical order. Default eigenvalues are the field
   elements with indices 1, 2, ..., num_slots; they are distinct and
   invertible whenever q - 1 >= num_slots. */
inline MatrixGF build_group_element(const GroupElementSpec& spec, const FiniteField& f,
                                    std::vector<uint16_t> eigenvalues = {}) {
    int r = spec.num_slots();
    if (eigenvalues.empty()) {
        if (f.order() < static_cast<uint32_t>(r) + 1)
            throw usage_error("field too small: need " + std::to_string(r) +
                              " distinct nonzero eigenvalues in a field of order " +
                              std::to_string(f.order()));
        for (int i = 1; i <= r; ++i) eigenvalues.push_back(static_cast<uint16_t>(i));
    }
    if (static_cast<int>(eigenvalues.size()) != r)
        throw usage_error("need one eigenvalue per slot");
    std::set<uint16_t> distinct(eigenvalues.begin(), eigenvalues.end());
    if (static_cast<int>(distinct.size()) != r)
        throw usage_error("eigenvalues must be distinct");
    for (uint16_t e : eigenvalues) {
        if (e == 0) throw usage_error("eigenvalues must be invertible");
        if (e >= f.order()) throw usage_error("eigenvalue index outside the field");
    }
    std::vector<MatrixGF> blocks;
    for (int s = 0; s < r; ++s)
        for (int m : spec.slots[static_cast<size_t>(s)].parts())
            blocks.push_back(jordan_block(f, m, eigenvalues[static_cast<size_t>(s)]));
    return block_diagonal(f, blocks);
}

} // namespace dlchi
