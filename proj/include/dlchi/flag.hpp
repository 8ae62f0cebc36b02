#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dlchi/bigint.hpp"
#include "dlchi/errors.hpp"
#include "dlchi/gf.hpp"
#include "dlchi/gf_matrix.hpp"
#include "dlchi/permutation.hpp"

namespace dlchi {

inline constexpr uint64_t kDefaultFlagBudget = 100000000;

/* Number of complete flags in GF(q)^n: prod_{i=1..n} (1 + q + ... + q^{i-1}). */
inline BigInt flag_count(int n, uint32_t q) {
    BigInt total = 1;
    for (int i = 1; i <= n; ++i) {
        BigInt bracket = 0, pw = 1;
        for (int t = 0; t < i; ++t) {
            bracket += pw;
            pw *= q;
        }
        total *= bracket;
    }
    return total;
}

namespace detail {

/* Column-reduces an invertible matrix in place (right multiplication by
   upper triangular matrices only) and returns the pivot rows. The pivot of
   a column is its lowest nonzero row; columns are normalized to pivot 1 and
   earlier pivot rows are cleared. The result is the unique such
   representative, and the pivot rows read off a permutation. */
inline std::vector<int> column_echelon_in_place(MatrixGF& m) {
    const FiniteField& f = m.field();
    int n = m.rows();
    if (m.cols() != n) throw usage_error("flag basis must be square");
    std::vector<int> piv(static_cast<size_t>(n), -1);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            uint16_t c = m.at(piv[static_cast<size_t>(k)], j);
            if (c == 0) continue;
            for (int i = 0; i < n; ++i)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(i, k)));
        }
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (m.at(i, j) != 0) { p = i; break; }
        if (p < 0) throw usage_error("flag basis is singular");
        piv[static_cast<size_t>(j)] = p;
        uint16_t s = f.inv(m.at(p, j));
        if (s != 1)
            for (int i = 0; i <= p; ++i) m.at(i, j) = f.mul(m.at(i, j), s);
    }
    return piv;
}

/* Visits every canonical flag basis in the Schubert cell of the pivot
   permutation piv (piv[j] = pivot row of column j). Free coordinates are
   the rows below the pivot that are not earlier pivots; the visitor gets a
   row-major n*n buffer. fixed_first >= 0 pins the first free coordinate,
   which is how the enumeration is sliced into parallel jobs. */
template <class Visitor>
void for_each_cell_flag(const FiniteField& f, const std::vector<int>& piv, int fixed_first,
                        Visitor&& visit) {
    int n = static_cast<int>(piv.size());
    std::vector<uint16_t> buf(static_cast<size_t>(n) * n, 0);
    std::vector<std::pair<int, int>> free_coords;
    std::vector<char> is_earlier(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < piv[static_cast<size_t>(j)]; ++i)
            if (!is_earlier[static_cast<size_t>(i)]) free_coords.emplace_back(i, j);
        buf[static_cast<size_t>(piv[static_cast<size_t>(j)]) * n + j] = 1;
        is_earlier[static_cast<size_t>(piv[static_cast<size_t>(j)])] = 1;
    }
    size_t nfree = free_coords.size();
    size_t start = 0;
    if (fixed_first >= 0) {
        if (nfree == 0) return;
        buf[static_cast<size_t>(free_coords[0].first) * n + free_coords[0].second] =
            static_cast<uint16_t>(fixed_first);
        start = 1;
    }
    std::vector<uint16_t> odo(nfree - start, 0);
    uint32_t q = f.order();
    for (;;) {
        visit(buf.data());
        size_t d = 0;
        while (d < odo.size()) {
            if (odo[d] + 1u < q) {
                ++odo[d];
                buf[static_cast<size_t>(free_coords[start + d].first) * n +
                    free_coords[start + d].second] = odo[d];
                break;
            }
            odo[d] = 0;
            buf[static_cast<size_t>(free_coords[start + d].first) * n +
                free_coords[start + d].second] = 0;
            ++d;
        }
        if (d == odo.size()) break;
    }
}

} // namespace detail

/* Complete flag in GF(q)^n, held as its canonical echelon basis. Two bases
   span the same flag exactly when they reduce to the same representative. */
class Flag {
public:
    explicit Flag(MatrixGF basis) : basis_(std::move(basis)) {
        pivots_ = detail::column_echelon_in_place(basis_);
    }

    const MatrixGF& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    int n() const { return basis_.rows(); }

    /* Basis of the i-dimensional subspace. */
    MatrixGF prefix(int i) const { return basis_.column_prefix(i); }

    bool operator==(const Flag& o) const { return basis_ == o.basis_; }

private:
    MatrixGF basis_;
    std::vector<int> pivots_;
};

/* All flags, cells in lexicographic order of pivot permutation, free
   coordinates in odometer order. */
inline std::vector<Flag> all_flags(int n, const FiniteField& f,
                                   uint64_t budget = kDefaultFlagBudget) {
    BigInt total = flag_count(n, f.order());
    if (total > budget)
        throw resource_error("flag enumeration size " + total.str() + " exceeds budget " +
                             std::to_string(budget));
    std::vector<Flag> out;
    out.reserve(total.convert_to<size_t>());
    for (const PermutationW& w : all_permutations(n)) {
        detail::for_each_cell_flag(f, w.images(), -1, [&](const uint16_t* data) {
            MatrixGF m(f, n, n);
            std::copy(data, data + static_cast<size_t>(n) * n, m.data().begin());
            out.push_back(Flag(std::move(m)));
        });
    }
    return out;
}

/* Relative position of the pair (F1, F2): the pivot permutation of
   F1^{-1} F2. Column reduction only mixes earlier columns in, so pivot j
   states in which coordinate step of F1 the j-th subspace of F2 gains a new
   direction; that is exactly the rank-matrix description
   w(j) = i iff dim(V_i meet V'_j) jumps by one in both indices. */
inline PermutationW relative_position(const Flag& f1, const Flag& f2) {
    MatrixGF m = f1.basis().inverse() * f2.basis();
    std::vector<int> piv = detail::column_echelon_in_place(m);
    return PermutationW(std::move(piv));
}

/* Reference implementation straight from the rank matrix
   d(i,j) = dim(V_i meet V'_j). Quadratically many rank computations; meant
   for cross-checking the reduction above, not for counting loops. */
inline PermutationW relative_position_rank_matrix(const Flag& f1, const Flag& f2) {
    int n = f1.n();
    std::vector<std::vector<int>> d(static_cast<size_t>(n) + 1,
                                    std::vector<int>(static_cast<size_t>(n) + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                intersection_dim(f1.prefix(i), f2.prefix(j));
    std::vector<int> img(static_cast<size_t>(n), -1);
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
            int jump = d[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                       d[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] -
                       d[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] +
                       d[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
            if (jump == 1) {
                if (img[static_cast<size_t>(j - 1)] != -1)
                    throw internal_error("rank matrix has two jumps in one column");
                img[static_cast<size_t>(j - 1)] = i - 1;
            }
        }
    }
    return PermutationW(std::move(img));
}

inline Flag apply_matrix(const MatrixGF& g, const Flag& f) {
    return Flag(g * f.basis());
}

} // namespace dlchi
