#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flataff/examples.hpp"
#include "flataff/ladder.hpp"
#include "helpers.hpp"

using namespace flataff;
using testutil::Rng;

namespace {

/** A nerve guaranteed to carry 2-simplices. */
Nerve triangle_rich_nerve(Rng& rng)
{
    for (;;)
    {
        Nerve n = testutil::random_nerve(rng, 5);
        if (!n.simplices_of_dim(2).empty())
            return n;
    }
}

struct SolvableInstance
{
    LevelData level;
};

/**
 * Gluing u_ij = tau(b_ij) f_i f_j^{-1} from random vertex maps f and random
 * edge translations b. The defect equals the induced-system coboundary of b,
 * so the single-rung ladder is always solvable.
 */
SolvableInstance random_solvable_level(Rng& rng, const Nerve& n, Index dim)
{
    std::vector<AffineMap> f;
    for (int v = 0; v < n.vertex_count; ++v)
        f.push_back(AffineMap(testutil::random_invertible(rng, dim, 3),
                              testutil::random_vector(rng, dim, 3)));
    GluingFamily u;
    std::map<std::pair<int, int>, MatrixQ> linear;
    for (const auto& e : n.simplices_of_dim(1))
    {
        AffineMap base = compose(f[static_cast<std::size_t>(e[0])],
                                 invert(f[static_cast<std::size_t>(e[1])]));
        VectorQ b = testutil::random_vector(rng, dim, 3);
        u.emplace(std::make_pair(e[0], e[1]),
                  compose(AffineMap::translation_by(b), base));
        linear[{e[0], e[1]}] = base.linear();
    }
    return SolvableInstance{LevelData{LocalSystem(n, dim, std::move(linear)), std::move(u)}};
}

}  // namespace

TEST_CASE("lifted closed chains stay closed in the carrier system")
{
    Rng rng(701);
    int done = 0;
    while (done < 110)
    {
        Nerve n = testutil::random_nerve(rng, 5);
        std::uniform_int_distribution<int> dims(1, 3);
        const Index dim = dims(rng);
        LocalSystem own = testutil::random_flat_system(rng, n, dim);
        LocalSystem carrier = testutil::random_flat_system(rng, n, dim);
        // a chain closed in its own system, by construction
        Cochain prev = coboundary(own, testutil::random_cochain(rng, own, 0));
        Cochain lifted = lift_defect(own, prev, carrier);
        CHECK(coboundary(carrier, lifted).is_zero_cochain());
        ++done;
    }
}

TEST_CASE("lift_defect rejects chains that are not closed")
{
    Rng rng(702);
    Nerve n = triangle_rich_nerve(rng);
    LocalSystem own = testutil::random_flat_system(rng, n, 2);
    LocalSystem carrier = testutil::random_flat_system(rng, n, 2);
    int rejected = 0;
    for (int trial = 0; trial < 20; ++trial)
    {
        Cochain c = testutil::random_cochain(rng, own, 1);
        if (!coboundary(own, c).is_zero_cochain())
        {
            CHECK_THROWS_AS(lift_defect(own, c, carrier), NotACocycle);
            ++rejected;
        }
    }
    CHECK(rejected > 0);
}

TEST_CASE("whitney sum stacks transitions block-diagonally")
{
    Rng rng(703);
    Nerve n = triangle_rich_nerve(rng);
    LocalSystem a = testutil::random_flat_system(rng, n, 2);
    LocalSystem b = testutil::random_flat_system(rng, n, 1);
    LocalSystem sum = whitney_sum(a, b);
    CHECK(sum.dim() == 3);
    CHECK(validate_system(sum).pass);
    for (const auto& e : n.simplices_of_dim(1))
    {
        MatrixQ t = sum.transition(e[0], e[1]);
        CHECK(mat_eq(MatrixQ(t.topLeftCorner(2, 2)), a.transition(e[0], e[1])));
        CHECK(mat_eq(MatrixQ(t.bottomRightCorner(1, 1)), b.transition(e[0], e[1])));
        CHECK(is_zero(MatrixQ(t.topRightCorner(2, 1))));
    }
}

TEST_CASE("random perturbed-cocycle ladders are solvable with verified replay")
{
    Rng rng(704);
    int done = 0;
    while (done < 40)
    {
        Nerve n = triangle_rich_nerve(rng);
        std::uniform_int_distribution<int> dims(1, 3);
        SolvableInstance inst = random_solvable_level(rng, n, dims(rng));

        LadderSpec spec;
        spec.base_nerve = n;
        spec.levels.push_back(inst.level);
        LadderVerdict v = run_ladder(spec);
        REQUIRE(v.status == LadderStatus::Solvable);
        CHECK(v.replay_verified);
        CHECK(v.corrections.size() == 1);
        ++done;
    }
}

TEST_CASE("two-level ladders over a shared carrier solve both rungs")
{
    Rng rng(705);
    int done = 0;
    while (done < 15)
    {
        Nerve n = triangle_rich_nerve(rng);
        const Index dim = 2;
        std::vector<AffineMap> f;
        for (int v = 0; v < n.vertex_count; ++v)
            f.push_back(AffineMap(testutil::random_invertible(rng, dim, 3),
                                  testutil::random_vector(rng, dim, 3)));
        auto make_level = [&](Rng& r) {
            GluingFamily u;
            std::map<std::pair<int, int>, MatrixQ> linear;
            for (const auto& e : n.simplices_of_dim(1))
            {
                AffineMap base = compose(f[static_cast<std::size_t>(e[0])],
                                         invert(f[static_cast<std::size_t>(e[1])]));
                u.emplace(std::make_pair(e[0], e[1]),
                          compose(AffineMap::translation_by(testutil::random_vector(r, dim, 3)),
                                  base));
                linear[{e[0], e[1]}] = base.linear();
            }
            return LevelData{LocalSystem(n, dim, std::move(linear)), std::move(u)};
        };

        LadderSpec spec;
        spec.base_nerve = n;
        spec.levels.push_back(make_level(rng));
        spec.levels.push_back(make_level(rng));
        LadderVerdict v = run_ladder(spec);
        REQUIRE(v.status == LadderStatus::Solvable);
        CHECK(v.corrections.size() == 2);
        CHECK(v.replay_verified);
        ++done;
    }
}

TEST_CASE("the planted tetra4 instance is obstructed at the first rung")
{
    Example tetra = load_example("tetra4");
    LadderVerdict v = run_ladder(*tetra.ladder);
    REQUIRE(v.status == LadderStatus::Obstructed);
    CHECK(v.obstructed_rung == 1);
    CHECK(!is_zero(v.certificate));
}
