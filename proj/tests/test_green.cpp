#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "dlchi/assignment.hpp"
#include "dlchi/character_table.hpp"
#include "dlchi/green.hpp"
#include "dlchi/partition.hpp"
#include "dlchi/pipeline.hpp"
#include "dlchi/tableau.hpp"

using namespace dlchi;

namespace {

// mu dominates lam: partial sums of mu are at least those of lam.
bool dominates(const Partition& mu, const Partition& lam) {
    int pm = 0, pl = 0;
    int parts = std::max(mu.num_parts(), lam.num_parts());
    for (int i = 0; i < parts; ++i) {
        pm += i < mu.num_parts() ? mu.part(i) : 0;
        pl += i < lam.num_parts() ? lam.part(i) : 0;
        if (pm < pl) return false;
    }
    return true;
}

Partition ones(int n) { return Partition(std::vector<int>(n, 1)); }

} // namespace

TEST_CASE("charge of small words", "[green]") {
    CHECK(charge_of_word({1}) == 0);
    CHECK(charge_of_word({1, 1, 2}) == 0);
    CHECK(charge_of_word({2, 1, 1}) == 1);
    CHECK(charge_of_word({2, 1}) == 1);
    CHECK(charge_of_word({1, 2}) == 0);
    CHECK(charge_of_word({3, 2, 1}) == 3);
    CHECK(charge_of_word({1, 2, 3}) == 0);
    // two standard subwords: first 1 3 2 (charge 1), then 1 (charge 0)
    CHECK(charge_of_word({1, 1, 3, 2}) == 1);
}

TEST_CASE("semistandard tableaux enumeration", "[green]") {
    // shape (2,1), content (1,1,1): the two standard tableaux
    auto t21 = ssyt_enumerate(Partition{2, 1}, ones(3));
    REQUIRE(t21.size() == 2);
    // shape (2,2), content (2,1,1): unique filling 11/23
    auto t22 = ssyt_enumerate(Partition{2, 2}, Partition{2, 1, 1});
    REQUIRE(t22.size() == 1);
    CHECK(t22[0].rows == std::vector<std::vector<int>>{{1, 1}, {2, 3}});
    // weakly increasing rows, strictly increasing columns
    for (const Tableau& t : ssyt_enumerate(Partition{3, 2}, Partition{2, 2, 1})) {
        for (const auto& row : t.rows)
            for (size_t j = 0; j + 1 < row.size(); ++j) CHECK(row[j] <= row[j + 1]);
        for (size_t i = 0; i + 1 < t.rows.size(); ++i)
            for (size_t j = 0; j < t.rows[i + 1].size(); ++j)
                CHECK(t.rows[i][j] < t.rows[i + 1][j]);
    }
}

TEST_CASE("charge generating polynomials on small shapes", "[green]") {
    IntPolynomial t = IntPolynomial::monomial(1, 1);
    IntPolynomial one = IntPolynomial::constant(1);
    CHECK(kostka_foulkes(Partition{3}, Partition{2, 1}) == t);
    CHECK(kostka_foulkes(Partition{2, 1}, Partition{2, 1}) == one);
    CHECK(kostka_foulkes(Partition{1, 1, 1}, Partition{2, 1}) == IntPolynomial());
    CHECK(kostka_foulkes(Partition{3, 1}, Partition{2, 1, 1}) == t + t * t);
    CHECK(kostka_foulkes(Partition{2, 2}, Partition{2, 1, 1}) == t);
    CHECK(kostka_foulkes(Partition{2, 1, 1}, Partition{2, 1, 1}) == one);
}

TEST_CASE("charge polynomial properties", "[green]") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& mu : all_partitions(n))
            for (const Partition& lam : all_partitions(n)) {
                IntPolynomial kf = kostka_foulkes(mu, lam);
                INFO("mu=" << mu.to_string() << " lambda=" << lam.to_string());
                // vanishing outside the dominance order, normalization on the diagonal
                if (!dominates(mu, lam)) CHECK(kf == IntPolynomial());
                if (mu == lam) CHECK(kf == IntPolynomial::constant(1));
                // value at one counts the tableaux
                CHECK(kf(1) == kostka_number(mu, lam));
                for (const BigInt& c : kf.coefficients()) CHECK(c >= 0);
            }
        // column content: the top shape carries exactly t^(n choose 2)
        CHECK(kostka_foulkes(Partition{n}, ones(n)) ==
              IntPolynomial::monomial(n * (n - 1) / 2, 1));
        // at t=1 the standard tableaux are counted
        CharacterTable table(n);
        for (const Partition& mu : all_partitions(n))
            CHECK(kostka_foulkes(mu, ones(n))(1) == table.dimension(mu));
    }
}

TEST_CASE("two by two table of Green polynomials", "[green]") {
    IntPolynomial q = IntPolynomial::monomial(1, 1);
    IntPolynomial one = IntPolynomial::constant(1);
    CHECK(green_polynomial(Partition{1, 1}, Partition{1, 1}) == q + one);
    CHECK(green_polynomial(Partition{2}, Partition{1, 1}) == one - q);
    CHECK(green_polynomial(Partition{1, 1}, Partition{2}) == one);
    CHECK(green_polynomial(Partition{2}, Partition{2}) == one);
}

TEST_CASE("Green polynomials for n=3", "[green]") {
    IntPolynomial q = IntPolynomial::monomial(1, 1);
    IntPolynomial q3 = IntPolynomial::monomial(3, 1);
    IntPolynomial one = IntPolynomial::constant(1);
    Partition l111{1, 1, 1}, l21{2, 1}, l3{3};
    // lambda = (2,1)
    CHECK(green_polynomial(Partition{1, 1, 1}, l21) == IntPolynomial::monomial(1, 2) + one);
    CHECK(green_polynomial(Partition{2, 1}, l21) == one);
    CHECK(green_polynomial(Partition{3}, l21) == one - q);
    // lambda = (1,1,1)
    CHECK(green_polynomial(Partition{1, 1, 1}, l111) ==
          q3 + IntPolynomial::monomial(2, 2) + IntPolynomial::monomial(1, 2) + one);
    CHECK(green_polynomial(Partition{2, 1}, l111) == one - q3);
    CHECK(green_polynomial(Partition{3}, l111) ==
          q3 - IntPolynomial::monomial(2, 1) - q + one);
    // lambda = (3)
    for (const Partition& rho : all_partitions(3))
        CHECK(green_polynomial(rho, l3) == one);
}

TEST_CASE("Green polynomial value at one counts assignments", "[green]") {
    for (int n = 1; n <= 7; ++n) {
        GreenCalculator calc(n);
        for (const Partition& rho : all_partitions(n))
            for (const Partition& lam : all_partitions(n)) {
                INFO("rho=" << rho.to_string() << " lambda=" << lam.to_string());
                CHECK(calc.q_polynomial(rho, lam)(1) == x_count(rho, lam));
            }
    }
}

TEST_CASE("Green polynomial degree and leading term for the full flag type", "[green]") {
    // lambda = (1^n): degree n(n-1)/2 with leading coefficient the sign character
    for (int n = 2; n <= 6; ++n) {
        for (const Partition& rho : all_partitions(n)) {
            IntPolynomial g = green_polynomial(rho, ones(n));
            int sign = (n - rho.num_parts()) % 2 == 0 ? 1 : -1;
            CHECK(g.degree() == n * (n - 1) / 2);
            CHECK(g.coefficient(g.degree()) == sign);
            CHECK(g.coefficient(0) == 1);
        }
    }
}

TEST_CASE("unipotent counting polynomial in closed form", "[green]") {
    // sign(rho) * prod_i (q^i - 1) / prod_j (q^rho_j - 1) equals the Green
    // polynomial at lambda = (1^n); its value at q=1 is n! only for rho = (1^n)
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& rho : all_partitions(n)) {
            ClosedFormResult cf = closed_form_chi(n, rho);
            INFO("rho=" << rho.to_string());
            CHECK(cf.poly == green_polynomial(rho, ones(n)));
            CHECK(cf.value_at_1 == (rho == ones(n) ? big_factorial(n) : BigInt(0)));
            CHECK(cf.poly.degree() == n * (n - 1) / 2);
        }
    }
}
