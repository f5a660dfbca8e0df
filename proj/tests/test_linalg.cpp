#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flataff/linalg.hpp"
#include "helpers.hpp"

using namespace flataff;
using testutil::Rng;

TEST_CASE("rref produces a reduced echelon form with unit pivots")
{
    Rng rng(101);
    for (int trial = 0; trial < 50; ++trial)
    {
        MatrixQ a = testutil::random_matrix(rng, 4, 5);
        MatrixQ r = a;
        std::vector<Index> pivots = rref_in_place(r);
        for (std::size_t p = 0; p < pivots.size(); ++p)
        {
            CHECK(r(static_cast<Index>(p), pivots[p]) == 1);
            for (Index i = 0; i < r.rows(); ++i)
                if (i != static_cast<Index>(p))
                    CHECK(r(i, pivots[p]) == 0);
        }
        CHECK(rank(a) == static_cast<Index>(pivots.size()));
    }
}

TEST_CASE("kernel basis vectors are annihilated and independent")
{
    Rng rng(102);
    for (int trial = 0; trial < 50; ++trial)
    {
        MatrixQ a = testutil::random_matrix(rng, 3, 6);
        MatrixQ k = kernel_basis(a);
        CHECK(is_zero(MatrixQ(a * k)));
        CHECK(rank(k) == k.cols());
        CHECK(k.cols() == a.cols() - rank(a));
    }
}

TEST_CASE("solve_linear returns a genuine solution exactly when consistent")
{
    Rng rng(103);
    for (int trial = 0; trial < 50; ++trial)
    {
        MatrixQ a = testutil::random_matrix(rng, 4, 3);
        VectorQ x = testutil::random_vector(rng, 3);
        VectorQ b = a * x;
        auto sol = solve_linear(a, b);
        REQUIRE(sol.has_value());
        CHECK(vec_eq(VectorQ(a * *sol), b));
    }

    MatrixQ a = MatrixQ::Zero(2, 2);
    VectorQ b(2);
    b << 1, 0;
    CHECK(!solve_linear(a, b).has_value());
}

TEST_CASE("determinant and inverse agree with composition")
{
    Rng rng(104);
    for (int trial = 0; trial < 30; ++trial)
    {
        MatrixQ a = testutil::random_invertible(rng, 3);
        MatrixQ b = testutil::random_invertible(rng, 3);
        CHECK(determinant(MatrixQ(a * b)) == determinant(a) * determinant(b));
        CHECK(mat_eq(MatrixQ(a * inverse(a)), MatrixQ::Identity(3, 3)));
    }
    CHECK_THROWS_AS(inverse(MatrixQ::Zero(2, 2)), SingularLinearPart);
}

TEST_CASE("subspace equality is exact and order-independent")
{
    Rng rng(105);
    MatrixQ a = testutil::random_matrix(rng, 4, 2);
    MatrixQ shuffled(4, 2);
    shuffled.col(0) = a.col(1);
    shuffled.col(1) = 3 * a.col(0);
    CHECK(subspace_equal(a, shuffled));

    MatrixQ bigger(4, 3);
    bigger.leftCols(2) = a;
    bigger.col(2) = testutil::random_vector(rng, 4);
    if (rank(bigger) > rank(a))
        CHECK(!subspace_equal(a, bigger));
}

TEST_CASE("quotient basis: projector kills the divided subspace and inverts the lift")
{
    Rng rng(106);
    for (int trial = 0; trial < 30; ++trial)
    {
        // span(b) inside span(z) by construction
        MatrixQ z = testutil::random_matrix(rng, 6, 4);
        MatrixQ coeff = testutil::random_matrix(rng, 4, 2);
        MatrixQ b = z * coeff;
        QuotientBasis q = build_quotient(z, b);

        CHECK(q.quotient_dim == rank(z) - rank(b));
        if (b.cols() > 0)
            CHECK(is_zero(MatrixQ(q.projector * q.b_basis)));
        if (q.quotient_dim > 0)
            CHECK(mat_eq(MatrixQ(q.projector * q.completion),
                         MatrixQ::Identity(q.quotient_dim, q.quotient_dim)));

        // a vector of span(z) is in span(b) iff its quotient coordinates vanish
        VectorQ inside = b.cols() ? VectorQ(b * testutil::random_vector(rng, b.cols()))
                                  : VectorQ(VectorQ::Zero(6));
        CHECK(is_zero(VectorQ(q.projector * inside)));
    }
}
