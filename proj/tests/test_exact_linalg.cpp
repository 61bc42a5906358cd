#include <doctest.h>

#include "latcoh/errors.hpp"
#include "latcoh/finabgroup.hpp"
#include "latcoh/intmatrix.hpp"
#include "latcoh/snf.hpp"
#include "oracles.hpp"

#include <random>

using namespace latcoh;
using namespace latcoh::testing;

TEST_CASE("smith form of pinned examples") {
    SmithForm sf = snf(IntMatrix{{2, 4}, {6, 8}});
    CHECK(sf.diagonal() == std::vector<mpz_class>{2, 4});
    CHECK(sf.U * IntMatrix{{2, 4}, {6, 8}} * sf.V == sf.D);

    SmithForm zero = snf(IntMatrix(2, 3));
    CHECK(zero.D == IntMatrix(2, 3));
    CHECK(zero.rank() == 0);

    SmithForm id = snf(IntMatrix::identity(3));
    CHECK(id.diagonal() == std::vector<mpz_class>{1, 1, 1});

    SmithForm empty = snf(IntMatrix(0, 0));
    CHECK(empty.rank() == 0);
    CHECK(empty.diagonal().empty());
}

TEST_CASE("smith form is deterministic") {
    IntMatrix A{{3, -1, 4}, {1, 5, -9}, {2, 6, 5}};
    SmithForm a = snf(A), b = snf(A);
    CHECK(a.U == b.U);
    CHECK(a.D == b.D);
    CHECK(a.V == b.V);
}

TEST_CASE("smith form against minor gcd oracle") {
    std::mt19937 rng(20260816);
    int checked = 0;
    for (int trial = 0; trial < 520; ++trial) {
        IntMatrix A = random_matrix(rng, 6, 10);
        std::string complaint = check_snf_against_oracle(A);
        CHECK_MESSAGE(complaint.empty(), complaint << " on " << A.to_string());
        ++checked;
    }
    CHECK(checked >= 500);
}

TEST_CASE("kernel basis") {
    IntMatrix K = kernel_basis(IntMatrix{{1, 1}});
    REQUIRE(K.cols() == 1);
    REQUIRE(K.rows() == 2);
    mpz_class a = K.at(0, 0), b = K.at(1, 0);
    CHECK(a + b == 0);
    CHECK((a == 1 || a == -1));

    // full kernel when there are no constraints
    IntMatrix full = kernel_basis(IntMatrix(0, 3));
    CHECK(full.cols() == 3);
    CHECK(same_span(full, IntMatrix::identity(3)));

    // trivial kernel of an injective map
    CHECK(kernel_basis(IntMatrix{{1, 0}, {0, 1}, {1, 1}}).cols() == 0);
}

TEST_CASE("kernel basis is saturated and annihilated") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 80; ++trial) {
        IntMatrix A = random_matrix(rng, 6, 10);
        IntMatrix K = kernel_basis(A);
        CHECK(K.cols() == A.cols() - rank(A));
        if (K.cols() > 0) {
            IntMatrix prod = A * K;
            CHECK(prod == IntMatrix(A.rows(), K.cols()));
            for (const mpz_class& d : snf(K).diagonal()) CHECK(d == 1);
        }
    }
}

TEST_CASE("image basis") {
    IntMatrix I = image_basis(IntMatrix{{2, 0}, {0, 3}});
    CHECK(same_span(I, IntMatrix{{2, 0}, {0, 3}}));

    IntMatrix J = image_basis(IntMatrix{{1}, {1}});
    REQUIRE(J.cols() == 1);
    CHECK(J.at(0, 0) == J.at(1, 0));
    CHECK((J.at(0, 0) == 1 || J.at(0, 0) == -1));

    std::mt19937 rng(78);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix A = random_matrix(rng, 5, 8);
        IntMatrix B = image_basis(A);
        CHECK(B.cols() == rank(A));
        CHECK(same_span(B, A));
    }
}

TEST_CASE("solve") {
    auto X = solve(IntMatrix{{2, 0}, {0, 2}}, IntMatrix{{4}, {6}});
    REQUIRE(X.has_value());
    CHECK(*X == IntMatrix{{2}, {3}});

    CHECK_FALSE(solve(IntMatrix{{2}}, IntMatrix{{3}}).has_value());
    CHECK_FALSE(solve(IntMatrix{{1}, {0}}, IntMatrix{{0}, {1}}).has_value());

    std::mt19937 rng(79);
    std::uniform_int_distribution<int> val(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix A = random_matrix(rng, 5, 6);
        IntMatrix W(A.cols(), 3);
        for (int i = 0; i < W.rows(); ++i)
            for (int j = 0; j < W.cols(); ++j)
                W.at(i, j) = val(rng);
        IntMatrix B = A * W;
        auto Y = solve(A, B);
        REQUIRE(Y.has_value());
        CHECK(A * *Y == B);
    }
}

TEST_CASE("subquotient group of pinned examples") {
    FinAbGroup Q = subquotient_group(IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{4, 0}, {0, 3}});
    CHECK(Q.divisors == std::vector<mpz_class>{6});
    CHECK(Q.to_string() == "[6]");

    FinAbGroup triv = subquotient_group(IntMatrix::identity(2), IntMatrix::identity(2));
    CHECK(triv.is_trivial());
    CHECK(triv.to_string() == "[]");

    CHECK(subquotient_group(IntMatrix::identity(2), IntMatrix::identity(2) * mpz_class(2)) ==
          FinAbGroup({2, 2}));

    FinAbGroup z4 = subquotient_group(IntMatrix{{1}, {1}}, IntMatrix{{4}, {4}});
    CHECK(z4.divisors == std::vector<mpz_class>{4});
}

TEST_CASE("subquotient by a scaled copy") {
    std::mt19937 rng(80);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix A = random_matrix(rng, 5, 6);
        IntMatrix K = image_basis(A);
        if (K.cols() == 0) continue;
        for (int c : {2, 3, 5}) {
            FinAbGroup Q = subquotient_group(K, K * mpz_class(c));
            REQUIRE(static_cast<int>(Q.divisors.size()) == K.cols());
            for (const mpz_class& d : Q.divisors) CHECK(d == c);
        }
    }
}

TEST_CASE("subquotient error contracts") {
    CHECK_THROWS_AS(subquotient_group(IntMatrix{{2}}, IntMatrix{{3}}), NotContained);
    CHECK_THROWS_AS(subquotient_group(IntMatrix::identity(2), IntMatrix{{1}, {0}}),
                    InfiniteQuotient);
}

TEST_CASE("finite abelian group values") {
    FinAbGroup g({2, 4});
    CHECK(g.to_string() == "[2,4]");
    CHECK(g.pretty() == "Z/2 x Z/4");
    CHECK(g.order() == 8);
    CHECK(g.is_p_primary(2));
    CHECK_FALSE(FinAbGroup({6}).is_p_primary(2));
    CHECK(FinAbGroup::trivial().is_p_primary(2));
    CHECK(FinAbGroup::copies(3, 2).pretty() == "(Z/2)^3");
    CHECK(FinAbGroup({2, 2}) == FinAbGroup::copies(2, 2));
    CHECK(FinAbGroup({4}) != FinAbGroup({2, 2}));
    CHECK(FinAbGroup::from_snf_diagonal({1, 1, 2, 4}) == FinAbGroup({2, 4}));

    // direct sums land back in divisor chain form
    CHECK(FinAbGroup({2}).direct_sum(FinAbGroup({3})) == FinAbGroup({6}));
    CHECK(FinAbGroup({2}).direct_sum(FinAbGroup({4})) == FinAbGroup({2, 4}));
    CHECK(FinAbGroup({6}).direct_sum(FinAbGroup({4})) == FinAbGroup({2, 12}));
    CHECK(FinAbGroup::trivial().direct_sum(FinAbGroup({5})) == FinAbGroup({5}));
}

TEST_CASE("matrix arithmetic basics") {
    IntMatrix A{{1, 2}, {3, 4}};
    CHECK(A.transpose() == IntMatrix{{1, 3}, {2, 4}});
    CHECK(A * IntMatrix::identity(2) == A);
    CHECK(A.determinant() == -2);
    CHECK(IntMatrix{{2, 0}, {0, 3}}.determinant() == 6);
    CHECK(A.pow(2) == IntMatrix{{7, 10}, {15, 22}});
    CHECK(A.pow(0) == IntMatrix::identity(2));

    IntMatrix h = IntMatrix::hstack(IntMatrix{{1}, {2}}, IntMatrix{{3}, {4}});
    CHECK(h == IntMatrix{{1, 3}, {2, 4}});
    IntMatrix v = IntMatrix::vstack(IntMatrix{{1, 2}}, IntMatrix{{3, 4}});
    CHECK(v == IntMatrix{{1, 2}, {3, 4}});
    CHECK(A.columns(1, 2) == IntMatrix{{2}, {4}});

    // empty shapes stay well behaved
    IntMatrix e(0, 2);
    CHECK((e * IntMatrix(2, 3)).rows() == 0);
    CHECK(rank(e) == 0);
}
