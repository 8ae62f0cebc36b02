#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "dlchi/green.hpp"
#include "dlchi/partition.hpp"
#include "dlchi/polynomial.hpp"
#include "dlchi/symfunc.hpp"

using namespace dlchi;

// Independent construction of the Green polynomials by orthogonalization in
// the ring of symmetric functions over Q(t). The basis dual to the deformed
// power sum pairing <p_a, p_b> = delta * z_a * prod_i 1/(1 - t^{a_i}) is
// produced from the monomial basis by Gram-Schmidt; expanding p_rho over it
// yields coefficient polynomials X(t), and the charge construction must
// reproduce q^{n(lambda)} X(1/q). This exercises none of the tableau or
// character code paths.

namespace {

using Fn = RationalFunction;
using Row = std::vector<Fn>;
using Mat = std::vector<Row>;

Fn fn_const(const BigRat& v) { return Fn::from_poly(RatPolynomial::constant(v)); }

Fn fn_zero() { return fn_const(BigRat(0)); }

// 1 - t^e as a rational function
Fn one_minus_t(int e) {
    std::vector<BigRat> c(e + 1, BigRat(0));
    c[0] = 1;
    c[e] = -1;
    return Fn::from_poly(RatPolynomial(std::move(c)));
}

Mat invert(Mat a) {
    size_t n = a.size();
    Mat inv(n, Row(n, fn_zero()));
    for (size_t i = 0; i < n; ++i) inv[i][i] = fn_const(BigRat(1));
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == fn_zero()) ++piv;
        REQUIRE(piv < n);
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Fn d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / d;
            inv[col][j] = inv[col][j] / d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == fn_zero()) continue;
            Fn factor = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - factor * a[col][j];
                inv[i][j] = inv[i][j] - factor * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

TEST_CASE("rational function arithmetic", "[hall-littlewood]") {
    Fn t = Fn::from_poly(RatPolynomial({BigRat(0), BigRat(1)}));
    Fn one = fn_const(BigRat(1));
    // (1 - t^2)/(1 - t) reduces to 1 + t
    Fn ratio = one_minus_t(2) / one_minus_t(1);
    CHECK(ratio.is_polynomial());
    CHECK(ratio == one + t);
    CHECK((t / (one + t)) * (one + t) == t);
    CHECK(one_minus_t(3) / one_minus_t(1) == one + t + t * t);
}

TEST_CASE("green polynomials from the orthogonal basis", "[hall-littlewood]") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<Partition> parts = all_partitions(n);
        std::reverse(parts.begin(), parts.end()); // ascending, (1^n) first
        size_t N = parts.size();

        // rows of M expand p_rho in the monomial basis
        Mat M(N, Row(N, fn_zero()));
        for (size_t i = 0; i < N; ++i) {
            SymmetricFunction p = power_to_monomial(parts[i]);
            for (size_t j = 0; j < N; ++j)
                M[i][j] = fn_const(BigRat(p.coefficient(parts[j])));
        }
        Mat Minv = invert(M);

        // diagonal pairing in the power sum basis
        std::vector<Fn> gram(N, fn_zero());
        for (size_t i = 0; i < N; ++i) {
            Fn denom = fn_const(BigRat(1));
            for (int e : parts[i].parts()) denom = denom * one_minus_t(e);
            gram[i] = fn_const(BigRat(parts[i].centralizer_order())) / denom;
        }

        // inner product of two vectors given in monomial coordinates
        auto ip = [&](const Row& a, const Row& b) {
            Fn acc = fn_zero();
            for (size_t i = 0; i < N; ++i) {
                Fn ai = fn_zero(), bi = fn_zero();
                for (size_t j = 0; j < N; ++j) {
                    ai = ai + a[j] * Minv[j][i];
                    bi = bi + b[j] * Minv[j][i];
                }
                acc = acc + ai * bi * gram[i];
            }
            return acc;
        };

        // Gram-Schmidt over the monomial basis in ascending order
        Mat C;
        for (size_t k = 0; k < N; ++k) {
            Row v(N, fn_zero());
            v[k] = fn_const(BigRat(1));
            for (size_t j = 0; j < k; ++j) {
                Fn coef = ip(v, C[j]) / ip(C[j], C[j]);
                for (size_t col = 0; col < N; ++col) v[col] = v[col] - coef * C[j][col];
            }
            C.push_back(std::move(v));
        }
        // unitriangular: leading coefficient one, no terms above the diagonal
        for (size_t k = 0; k < N; ++k) {
            CHECK(C[k][k] == fn_const(BigRat(1)));
            for (size_t j = k + 1; j < N; ++j) CHECK(C[k][j] == fn_zero());
        }
        for (size_t k = 0; k < N; ++k)
            for (size_t j = 0; j < k; ++j) CHECK(ip(C[k], C[j]) == fn_zero());

        // the transition matrix from the orthogonal basis back to p_rho
        Mat X(N, Row(N, fn_zero()));
        Mat Cinv = invert(C);
        for (size_t i = 0; i < N; ++i)
            for (size_t k = 0; k < N; ++k) {
                Fn acc = fn_zero();
                for (size_t j = 0; j < N; ++j) acc = acc + M[i][j] * Cinv[j][k];
                X[i][k] = acc;
            }

        GreenCalculator calc(n);
        for (size_t i = 0; i < N; ++i)
            for (size_t k = 0; k < N; ++k) {
                INFO("n=" << n << " rho=" << parts[i].to_string()
                          << " lambda=" << parts[k].to_string());
                REQUIRE(X[i][k].is_polynomial());
                IntPolynomial xt = X[i][k].as_polynomial().to_int_polynomial();
                int shift = parts[k].n_stat();
                IntPolynomial green = calc.q_polynomial(parts[i], parts[k]);
                CHECK(green.degree() <= shift);
                CHECK(xt.degree() <= shift);
                // Q(q) = q^shift X(1/q): compare mirrored coefficients
                for (int d = 0; d <= shift; ++d)
                    CHECK(green.coefficient(shift - d) == xt.coefficient(d));
            }
    }
}
