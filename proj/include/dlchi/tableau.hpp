#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dlchi/errors.hpp"
#include "dlchi/partition.hpp"

namespace dlchi {

/* Semistandard tableau: rows weakly increase left to right, columns strictly
   increase top to bottom. Entries are 1-based letters. */
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    std::string to_string() const {
        std::ostringstream os;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r) os << " / ";
            for (size_t c = 0; c < rows[r].size(); ++c) {
                if (c) os << ' ';
                os << rows[r][c];
            }
        }
        return os.str();
    }
};

/* All semistandard tableaux of the given shape whose content is the given
   composition (content.part(i) copies of the letter i+1). Cells are filled
   in row-major order with candidate letters tried in increasing order, so
   the output order is deterministic. */
inline std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content) {
    if (shape.weight() != content.weight())
        throw usage_error("shape and content must have equal weight");
    std::vector<Tableau> out;
    int nrows = shape.num_parts();
    int letters = content.num_parts();
    std::vector<std::vector<int>> rows(static_cast<size_t>(nrows));
    for (int r = 0; r < nrows; ++r) rows[static_cast<size_t>(r)].assign(static_cast<size_t>(shape.part(r)), 0);
    std::vector<int> remaining(static_cast<size_t>(letters));
    for (int i = 0; i < letters; ++i) remaining[static_cast<size_t>(i)] = content.part(i);

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == nrows) {
            out.push_back(Tableau{shape, rows});
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r)) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= letters; ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            --remaining[static_cast<size_t>(v - 1)];
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            fill(nr, nc);
            rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
            ++remaining[static_cast<size_t>(v - 1)];
        }
    };
    if (nrows == 0) out.push_back(Tableau{shape, rows});
    else fill(0, 0);
    return out;
}

/* Charge of a word on letters 1..r with partition content, by repeated
   standard subword extraction:

     - scan the word right to left for the first 1, then for each successive
       letter k+1 continue scanning leftward, wrapping cyclically past the
       left end, until it is found;
     - the extracted letters form a standard subword; its charge adds
       index(k) over all letters, where index(1) = 0 and index(k+1) equals
       index(k) + 1 exactly when k+1 sits to the left of k in the original
       word;
     - remove the subword and repeat until the word is empty.

   Worked example: the word 2 1 1 (row reading of the one-column-plus
   tableau with content (2,1)) extracts the subword at positions {0, 2}
   (letters 2 and 1): 2 lies left of 1, so its index is 1, giving charge 1;
   the leftover word "1" adds 0. Total charge 1. */
inline int charge_of_word(std::vector<int> word) {
    int total = 0;
    while (!word.empty()) {
        int len = static_cast<int>(word.size());
        std::vector<int> pos_of_letter;
        int cur = -1;
        for (int i = len - 1; i >= 0; --i) {
            if (word[static_cast<size_t>(i)] == 1) { cur = i; break; }
        }
        if (cur < 0) throw usage_error("charge needs a word containing the letter 1");
        pos_of_letter.push_back(cur);
        for (int next = 2;; ++next) {
            int found = -1;
            for (int step = 1; step < len; ++step) {
                int i = (cur - step % len + len) % len;
                if (word[static_cast<size_t>(i)] == next) { found = i; break; }
            }
            if (found < 0) break;
            pos_of_letter.push_back(found);
            cur = found;
        }
        // indices of the standard subword
        int k_count = static_cast<int>(pos_of_letter.size());
        int index = 0;
        for (int k = 1; k < k_count; ++k) {
            if (pos_of_letter[static_cast<size_t>(k)] < pos_of_letter[static_cast<size_t>(k - 1)]) ++index;
            total += index;
        }
        // remove extracted positions
        std::vector<char> keep(static_cast<size_t>(len), 1);
        for (int p : pos_of_letter) keep[static_cast<size_t>(p)] = 0;
        std::vector<int> rest;
        rest.reserve(static_cast<size_t>(len - k_count));
        for (int i = 0; i < len; ++i)
            if (keep[static_cast<size_t>(i)]) rest.push_back(word[static_cast<size_t>(i)]);
        word = std::move(rest);
    }
    return total;
}

/* Reverse reading word: rows top to bottom, each row right to left. */
inline std::vector<int> reverse_reading_word(const Tableau& t) {
    std::vector<int> w;
    for (const auto& row : t.rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
    return w;
}

inline int charge(const Tableau& t) { return charge_of_word(reverse_reading_word(t)); }

} // namespace dlchi
