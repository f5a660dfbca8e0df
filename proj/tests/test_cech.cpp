#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flataff/cech.hpp"
#include "flataff/examples.hpp"
#include "helpers.hpp"

using namespace flataff;
using testutil::Rng;

TEST_CASE("nerve validation catches missing faces and bad tuples")
{
    Nerve n;
    n.vertex_count = 3;
    n.simplices = {{0}, {1}, {2}, {0, 1, 2}};
    CHECK(!validate_nerve(n).pass);  // edges are missing

    n.simplices = {{0}, {1}, {2}, {1, 0}};
    CHECK(!validate_nerve(n).pass);  // not strictly increasing

    n.simplices = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    CHECK(validate_nerve(n).pass);
}

TEST_CASE("system validation checks presence, invertibility, and flatness")
{
    Example e = load_example("circle3");
    CHECK(validate_system(*e.system).pass);

    // breaking one transition on a triangle breaks flatness
    Nerve n;
    n.vertex_count = 3;
    n.simplices = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    std::map<std::pair<int, int>, MatrixQ> t;
    t[{0, 1}] = MatrixQ::Identity(1, 1);
    t[{0, 2}] = MatrixQ::Identity(1, 1);
    MatrixQ two(1, 1);
    two(0, 0) = 2;
    t[{1, 2}] = two;
    SystemReport r = validate_system(LocalSystem(n, 1, std::move(t)));
    CHECK(!r.pass);
    REQUIRE(!r.offending_simplices.empty());
    CHECK(r.offending_simplices.front() == std::vector<int>{0, 1, 2});
}

TEST_CASE("delta squared vanishes on random flat systems")
{
    Rng rng(601);
    int done = 0;
    while (done < 80)
    {
        Nerve n = testutil::random_nerve(rng);
        std::uniform_int_distribution<int> dims(1, 3);
        LocalSystem s = testutil::random_flat_system(rng, n, dims(rng));
        REQUIRE(validate_system(s).pass);
        for (int degree : {0, 1})
        {
            Cochain c = testutil::random_cochain(rng, s, degree);
            CHECK(coboundary(s, coboundary(s, c)).is_zero_cochain());
        }
        ++done;
    }
}

TEST_CASE("delta matrix agrees with the cochain-level coboundary")
{
    Rng rng(602);
    for (int trial = 0; trial < 30; ++trial)
    {
        Nerve n = testutil::random_nerve(rng, 5);
        LocalSystem s = testutil::random_flat_system(rng, n, 2);
        Cochain c = testutil::random_cochain(rng, s, 1);
        if (s.nerve().simplices_of_dim(2).empty())
            continue;
        VectorQ via_matrix = delta_matrix(s, 1) * cochain_to_vector(s, c);
        CHECK(vec_eq(via_matrix, cochain_to_vector(s, coboundary(s, c))));
    }
}

TEST_CASE("circle3 and tetra4 have the expected cohomology ranks")
{
    Example circle = load_example("circle3");
    CHECK(cohomology(*circle.system, 0).dim == 1);
    CHECK(cohomology(*circle.system, 1).dim == 1);

    Example tetra = load_example("tetra4");
    CHECK(cohomology(*tetra.system, 0).dim == 1);
    CHECK(cohomology(*tetra.system, 1).dim == 0);
    CHECK(cohomology(*tetra.system, 2).dim == 1);
}

TEST_CASE("solve_coboundary recovers primitives for exact cocycles")
{
    Rng rng(603);
    int done = 0;
    while (done < 40)
    {
        Nerve n = testutil::random_nerve(rng, 5);
        LocalSystem s = testutil::random_flat_system(rng, n, 2);
        if (s.nerve().simplices_of_dim(2).empty())
            continue;
        Cochain a = testutil::random_cochain(rng, s, 1);
        Cochain z = coboundary(s, a);
        CoboundarySolution sol = solve_coboundary(s, z);
        REQUIRE(sol.solved);
        Cochain replay = coboundary(s, sol.primitive);
        CHECK(vec_eq(cochain_to_vector(s, replay), cochain_to_vector(s, z)));
        ++done;
    }
}

TEST_CASE("solve_coboundary certifies the planted nonexact class on tetra4")
{
    Example tetra = load_example("tetra4");
    const LocalSystem& s = *tetra.system;
    Cochain z = zero_cochain(s, 2);
    z.values[{0, 1, 2}](0) = 1;  // generator of H^2 up to sign
    CoboundarySolution sol = solve_coboundary(s, z);
    CHECK(!sol.solved);
    CHECK(!is_zero(sol.certificate));
}

TEST_CASE("solve_coboundary rejects non-cocycles")
{
    Rng rng(604);
    Nerve n;
    n.vertex_count = 4;
    n.simplices = {{0}, {1},    {2},    {3},    {0, 1}, {0, 2}, {0, 3},   {1, 2},
                   {1, 3}, {2, 3}, {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                   {0, 1, 2, 3}};
    LocalSystem s = testutil::random_flat_system(rng, n, 1);
    Cochain z = zero_cochain(s, 2);
    z.values[{0, 1, 2}](0) = 1;  // not closed once the 3-simplex is present
    CHECK_THROWS_AS(solve_coboundary(s, z), NotACocycle);
}

TEST_CASE("nonabelian defect is the translation part of the triple products")
{
    Example tetra = load_example("tetra4");
    const LadderSpec& spec = *tetra.ladder;
    DefectResult r = nonabelian_defect(spec.base_nerve, spec.levels.front().gluing, 1);
    CHECK(r.defect.values.at({0, 1, 2})(0) == 2);
    CHECK(r.defect.values.at({0, 1, 3})(0) == 0);
    CHECK(r.defect.values.at({0, 2, 3})(0) == 0);
    CHECK(r.defect.values.at({1, 2, 3})(0) == 1);
    // the induced linear system keeps the edge scalings
    CHECK(r.induced.transition(0, 1)(0, 0) == 2);
    CHECK(r.induced.transition(1, 2)(0, 0) == 1);
    // and the defect is closed in it
    CHECK(coboundary(r.induced, r.defect).is_zero_cochain());
}

TEST_CASE("defect with a rotating gluing is rejected as non-translational")
{
    Nerve n;
    n.vertex_count = 3;
    n.simplices = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    MatrixQ rot(2, 2);
    rot << 0, -1, 1, 0;
    GluingFamily u;
    u.emplace(std::make_pair(0, 1), AffineMap(rot, VectorQ::Zero(2)));
    u.emplace(std::make_pair(0, 2), AffineMap::identity(2));
    u.emplace(std::make_pair(1, 2), AffineMap::identity(2));
    CHECK_THROWS_AS(nonabelian_defect(n, u, 2), NotTranslational);
}
