#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "dlchi/assignment.hpp"
#include "dlchi/bigint.hpp"
#include "dlchi/induced.hpp"
#include "dlchi/partition.hpp"
#include "dlchi/permutation.hpp"

using namespace dlchi;

namespace {

/* Independent partition counter: p(n) by the bounded-part recurrence. */
long long partition_count_oracle(int n) {
    std::vector<std::vector<long long>> dp(static_cast<size_t>(n) + 1,
                                           std::vector<long long>(static_cast<size_t>(n) + 1, 0));
    for (int k = 0; k <= n; ++k) dp[0][static_cast<size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k) {
            dp[static_cast<size_t>(m)][static_cast<size_t>(k)] =
                dp[static_cast<size_t>(m)][static_cast<size_t>(k - 1)] +
                (m >= k ? dp[static_cast<size_t>(m - k)][static_cast<size_t>(k)] : 0);
        }
    return dp[static_cast<size_t>(n)][static_cast<size_t>(n)];
}

/* Ordered set partition counts by the binomial recurrence. */
BigInt fubini_oracle(int s) {
    std::vector<BigInt> a(static_cast<size_t>(s) + 1);
    a[0] = 1;
    for (int i = 1; i <= s; ++i) {
        BigInt sum = 0;
        for (int k = 1; k <= i; ++k) sum += big_binomial(i, k) * a[static_cast<size_t>(i - k)];
        a[static_cast<size_t>(i)] = sum;
    }
    return a[static_cast<size_t>(s)];
}

/* Number of distinct orderings of the parts of lambda. */
BigInt rearrangement_count(const Partition& lambda) {
    BigInt r = big_factorial(lambda.num_parts());
    const auto& parts = lambda.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        r /= big_factorial(static_cast<int>(j - i));
        i = j;
    }
    return r;
}

std::vector<std::vector<int>> value_preserving_perms(const std::vector<int>& values) {
    int s = static_cast<int>(values.size());
    std::vector<int> idx(static_cast<size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int j = 0; j < s; ++j)
            if (values[static_cast<size_t>(idx[static_cast<size_t>(j)])] !=
                values[static_cast<size_t>(j)]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

} // namespace

TEST_CASE("partition normalization and accessors") {
    Partition p({2, 3, 2});
    CHECK(p.parts() == std::vector<int>{3, 2, 2});
    CHECK(p.weight() == 7);
    CHECK(p.num_parts() == 3);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.to_string() == "(3,2,2)");
    CHECK(p.plain_string() == "3,2,2");
    CHECK(Partition{}.to_string() == "()");
    CHECK_THROWS_AS(Partition({0, 1}), usage_error);
    CHECK_THROWS_AS(Partition({-2}), usage_error);
}

TEST_CASE("partition parsing") {
    CHECK(parse_partition("3,2,2,2,1") == Partition({3, 2, 2, 2, 1}));
    CHECK(parse_partition("(7,3)") == Partition({7, 3}));
    CHECK(parse_partition(" 2, 1 ") == Partition({2, 1}));
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS_AS(parse_partition("3,,1"), usage_error);
    CHECK_THROWS_AS(parse_partition("a,b"), usage_error);
    CHECK_THROWS_AS(parse_partition("3,0"), usage_error);
}

TEST_CASE("all_partitions order and count") {
    auto p0 = all_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = all_partitions(4);
    std::vector<Partition> expected{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                    Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
    CHECK(p4 == expected);

    for (int n = 0; n <= 12; ++n) {
        auto parts = all_partitions(n);
        CHECK(static_cast<long long>(parts.size()) == partition_count_oracle(n));
        std::set<Partition> dedup(parts.begin(), parts.end());
        CHECK(dedup.size() == parts.size());
        for (const Partition& p : parts) CHECK(p.weight() == n);
    }
}

TEST_CASE("conjugate partition") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({4}).conjugate() == Partition({1, 1, 1, 1}));
    CHECK(Partition{}.conjugate() == Partition{});
    for (int n = 0; n <= 8; ++n)
        for (const Partition& p : all_partitions(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("centralizer orders sum to the group order") {
    CHECK(Partition({1, 1, 1}).centralizer_order() == 6);
    CHECK(Partition({3}).centralizer_order() == 3);
    CHECK(Partition({2, 2}).centralizer_order() == 8);
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const Partition& rho : all_partitions(n))
            total += big_factorial(n) / rho.centralizer_order();
        CHECK(total == big_factorial(n));
    }
}

TEST_CASE("class sizes match brute force") {
    for (int n = 1; n <= 6; ++n) {
        std::map<Partition, long long> census;
        for (const PermutationW& w : all_permutations(n)) ++census[w.cycle_type()];
        for (const Partition& rho : all_partitions(n))
            CHECK(BigInt(census[rho]) == big_factorial(n) / rho.centralizer_order());
    }
}

TEST_CASE("n statistic") {
    CHECK(Partition({2, 1}).n_stat() == 1);
    CHECK(Partition({1, 1, 1}).n_stat() == 3);
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lam : all_partitions(n)) {
            // n(lambda) also counts pairs within columns
            Partition c = lam.conjugate();
            BigInt via_cols = 0;
            for (int j = 0; j < c.num_parts(); ++j) via_cols += big_binomial(c.part(j), 2);
            CHECK(BigInt(lam.n_stat()) == via_cols);
        }
}

TEST_CASE("permutation composition, inverse, length") {
    for (const PermutationW& w : all_permutations(4)) {
        CHECK((w * w.inverse()).is_identity());
        CHECK(w.inverse().length() == w.length());
        CHECK(w.cycle_type() == w.inverse().cycle_type());
    }
    PermutationW s1 = PermutationW::simple(3, 1);
    PermutationW s2 = PermutationW::simple(3, 2);
    // (s1*s2)(i) = s1(s2(i)): 0->0->... s2 swaps 1,2; s1 swaps 0,1
    PermutationW prod = s1 * s2;
    CHECK(prod.one_line() == std::vector<int>{2, 3, 1});
    CHECK(prod.length() == 2);
    CHECK(prod.cycle_type() == Partition({3}));
}

TEST_CASE("cycle notation round trips") {
    PermutationW w = parse_cycles(4, "(1 2)(3 4)");
    CHECK(w.one_line() == std::vector<int>{2, 1, 4, 3});
    CHECK(w.cycle_string() == "(1 2)(3 4)");
    CHECK(parse_cycles(3, "id").is_identity());
    CHECK(parse_cycles(5, "(12)(45)") == parse_cycles(5, "(1,2)(4,5)"));
    CHECK_THROWS_AS(parse_cycles(3, "(1 4)"), usage_error);
    CHECK_THROWS_AS(parse_cycles(3, "(1 2"), usage_error);
    CHECK_THROWS_AS(parse_cycles(4, "(1 2)(2 3)"), usage_error);
    CHECK(PermutationW::identity(3).cycle_string() == "id");
}

TEST_CASE("class representative and lex rank") {
    PermutationW w = PermutationW::class_representative(Partition({3, 2}));
    CHECK(w.cycle_type() == Partition({3, 2}));
    CHECK(w.cycle_string() == "(1 2 3)(4 5)");
    for (int n = 1; n <= 5; ++n) {
        auto perms = all_permutations(n);
        for (size_t i = 0; i < perms.size(); ++i)
            CHECK(lex_rank(perms[i]) == i);
    }
}

TEST_CASE("assignment enumeration matches the worked example") {
    Partition rho({3, 2, 2, 2, 1});
    Partition lambda({7, 3});
    auto maps = enumerate_P(rho, lambda);
    REQUIRE(maps.size() == 4);
    CHECK(maps[0].target == std::vector<int>{0, 0, 0, 1, 1});
    CHECK(maps[1].target == std::vector<int>{0, 0, 1, 0, 1});
    CHECK(maps[2].target == std::vector<int>{0, 1, 0, 0, 1});
    CHECK(maps[3].target == std::vector<int>{1, 0, 0, 0, 0});
    CHECK(x_count(rho, lambda) == 4);
    CHECK(x_recursive(rho, lambda) == 4);

    auto classes = collapse_classes(rho, lambda);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].first.to_string() == "{7<-[3,2,2], 3<-[2,1]}");
    CHECK(classes[0].second == 3);
    CHECK(classes[1].first.to_string() == "{7<-[2,2,2,1], 3<-[3]}");
    CHECK(classes[1].second == 1);
}

TEST_CASE("assignment maps validate their defining condition") {
    Partition rho({2, 1});
    Partition lambda({2, 1});
    CHECK_NOTHROW(AssignmentMap(rho, lambda, {0, 1}));
    CHECK_THROWS_AS(AssignmentMap(rho, lambda, {1, 0}), usage_error);
    CHECK_THROWS_AS(AssignmentMap(rho, lambda, {0}), usage_error);
    CHECK_THROWS_AS(AssignmentMap(rho, lambda, {0, 5}), usage_error);
    CHECK_THROWS_AS(x_count(Partition({2}), Partition({1})), usage_error);
}

TEST_CASE("counting special cases") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        Partition regular(std::move(ones));
        Partition full({n});
        for (const Partition& lam : all_partitions(n)) {
            CHECK(x_count(regular, lam) == big_factorial(n) / lam.factorial_product());
            CHECK(x_count(full, lam) == (lam == full ? 1 : 0));
            CHECK(x_count(lam, full) == 1);
        }
    }
}

TEST_CASE("recursion agrees with enumeration everywhere") {
    for (int n = 0; n <= 7; ++n)
        for (const Partition& rho : all_partitions(n))
            for (const Partition& lam : all_partitions(n))
                CHECK(x_recursive(rho, lam) == x_count(rho, lam));
}

TEST_CASE("ordered refinements add up to Fubini numbers") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& rho : all_partitions(n)) {
            BigInt total = 0;
            for (const Partition& lam : all_partitions(n))
                total += x_count(rho, lam) * rearrangement_count(lam);
            CHECK(total == fubini_oracle(rho.num_parts()));
        }
}

TEST_CASE("collapse classes are the orbits of part-preserving relabelings") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& rho : all_partitions(n))
            for (const Partition& lam : all_partitions(n)) {
                auto maps = enumerate_P(rho, lam);
                auto src_perms = value_preserving_perms(rho.parts());
                auto dst_perms = value_preserving_perms(lam.parts());
                for (size_t a = 0; a < maps.size(); ++a) {
                    for (size_t b = 0; b < maps.size(); ++b) {
                        bool related = false;
                        for (const auto& pi : src_perms) {
                            if (related) break;
                            for (const auto& tau : dst_perms) {
                                bool match = true;
                                for (size_t j = 0; j < maps[a].target.size() && match; ++j)
                                    match = maps[b].target[j] ==
                                            tau[static_cast<size_t>(
                                                maps[a].target[static_cast<size_t>(
                                                    pi[j])])];
                                if (match) { related = true; break; }
                            }
                        }
                        bool same_class = collapse(maps[a]) == collapse(maps[b]);
                        CHECK(related == same_class);
                    }
                }
                auto classes = collapse_classes(rho, lam);
                BigInt fiber_total = 0;
                for (const auto& [cls, size] : classes) fiber_total += size;
                CHECK(fiber_total == x_count(rho, lam));
                CHECK(BigInt(classes.size()) <= x_count(rho, lam));
            }
}

TEST_CASE("induced trivial character small values") {
    // permutation character of S_3 on cosets of S_2: fixed points of the
    // action on 3 letters
    CHECK(induced_trivial_value(Partition({2, 1}), Partition({1, 1, 1})) == 3);
    CHECK(induced_trivial_value(Partition({2, 1}), Partition({2, 1})) == 1);
    CHECK(induced_trivial_value(Partition({2, 1}), Partition({3})) == 0);
    // trivial parabolic: regular character
    CHECK(induced_trivial_value(Partition({1, 1}), Partition({1, 1})) == 2);
    CHECK(induced_trivial_value(Partition({1, 1}), Partition({2})) == 0);
    // full parabolic: trivial character
    for (const Partition& rho : all_partitions(4))
        CHECK(induced_trivial_value(Partition({4}), rho) == 1);
}

TEST_CASE("induced value equals the assignment count") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& rho : all_partitions(n))
            for (const Partition& lam : all_partitions(n))
                CHECK(induced_trivial_value(lam, rho) == x_count(rho, lam));
}

TEST_CASE("induced value is a class function") {
    std::mt19937 rng(20240811);
    for (int n : {4, 5}) {
        for (const Partition& rho : all_partitions(n)) {
            PermutationW w = PermutationW::class_representative(rho);
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<int> im(static_cast<size_t>(n));
                std::iota(im.begin(), im.end(), 0);
                std::shuffle(im.begin(), im.end(), rng);
                PermutationW v{im};
                PermutationW conj = v * w * v.inverse();
                REQUIRE(conj.cycle_type() == rho);
                for (const Partition& lam : all_partitions(n))
                    CHECK(induced_trivial_value(lam, conj) == induced_trivial_value(lam, w));
            }
        }
    }
}

TEST_CASE("induced respects its coset budget") {
    CHECK_THROWS_AS(induced_trivial_value(Partition({1, 1, 1, 1, 1}), Partition({5}), 10),
                    resource_error);
    CHECK_NOTHROW(induced_trivial_value(Partition({1, 1, 1, 1, 1}), Partition({5}), 120));
}
