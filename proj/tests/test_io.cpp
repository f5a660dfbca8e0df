#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flataff/examples.hpp"
#include "flataff/io.hpp"
#include "helpers.hpp"

using namespace flataff;
using flataff::io::json;
using testutil::Rng;

TEST_CASE("rationals round-trip exactly, including big and negative values")
{
    for (const char* lit : {"0", "1", "-7", "2/3", "-355/113", "123456789123456789/2"})
    {
        Rational r = parse_rational(lit);
        CHECK(io::rational_from_json(io::rational_to_json(r)) == r);
    }
    CHECK_THROWS_AS(io::rational_from_json(json("not-a-number")), ParseError);
    CHECK_THROWS_AS(io::rational_from_json(json(1.5)), ParseError);
}

TEST_CASE("matrices and vectors round-trip")
{
    Rng rng(801);
    MatrixQ m = testutil::random_matrix(rng, 3, 4);
    CHECK(mat_eq(io::matrix_from_json(io::matrix_to_json(m)), m));
    VectorQ v = testutil::random_vector(rng, 5);
    CHECK(vec_eq(io::vector_from_json(io::vector_to_json(v)), v));
    CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[\"1\"],[\"1\",\"2\"]]")), ParseError);
}

TEST_CASE("affine maps round-trip and reject singular input")
{
    Rng rng(802);
    AffineMap f(testutil::random_invertible(rng, 3), testutil::random_vector(rng, 3));
    CHECK(io::affine_from_json(io::affine_to_json(f)) == f);
    json bad = json{{"linear", json::parse("[[\"0\",\"0\"],[\"0\",\"0\"]]")},
                    {"translation", json::parse("[\"0\",\"0\"]")}};
    CHECK_THROWS_AS(io::affine_from_json(bad), ParseError);
}

TEST_CASE("representations, modules, and fibrations round-trip")
{
    Example gamma = load_example("gamma3");
    json rep = io::representation_to_json(*gamma.representation);
    AffineRepresentation back = io::representation_from_json(rep);
    CHECK(rep == io::representation_to_json(back));

    CoefficientModule m = linear_module(*gamma.representation);
    CHECK(io::module_to_json(io::module_from_json(io::module_to_json(m)))
          == io::module_to_json(m));

    Example p2 = load_example("gamma3-p2");
    json fib = io::fibration_to_json(*p2.fibration);
    CHECK(fib == io::fibration_to_json(io::fibration_from_json(fib)));
}

TEST_CASE("local systems, cochains, and gluings round-trip")
{
    Rng rng(803);
    Nerve n = testutil::random_nerve(rng, 5);
    LocalSystem s = testutil::random_flat_system(rng, n, 2);
    json sys = io::system_to_json(s);
    CHECK(sys == io::system_to_json(io::system_from_json(sys)));

    Cochain c = testutil::random_cochain(rng, s, 1);
    json coch = io::cochain_to_json(c);
    CHECK(coch == io::cochain_to_json(io::cochain_from_json(coch)));

    Example tetra = load_example("tetra4");
    json gluing = io::gluing_to_json(tetra.ladder->levels.front().gluing);
    CHECK(gluing == io::gluing_to_json(io::gluing_from_json(gluing)));

    json ladder = io::ladder_to_json(*tetra.ladder);
    CHECK(ladder == io::ladder_to_json(io::ladder_from_json(ladder)));
}

TEST_CASE("ladder verdicts serialize both outcomes")
{
    Example tetra = load_example("tetra4");
    LadderVerdict v = run_ladder(*tetra.ladder);
    json obstructed = io::verdict_to_json(v);
    CHECK(obstructed.at("status") == "obstructed");
    CHECK(obstructed.at("obstructed_rung") == 1);

    LadderVerdict ok;
    ok.status = LadderStatus::Solvable;
    ok.replay_verified = true;
    json solvable = io::verdict_to_json(ok);
    CHECK(solvable.at("status") == "solvable");
    CHECK(solvable.at("replay_verified") == true);
}

TEST_CASE("malformed documents raise ParseError, not crashes")
{
    CHECK_THROWS_AS(io::representation_from_json(json::object()), ParseError);
    CHECK_THROWS_AS(io::system_from_json(json::object()), ParseError);
    CHECK_THROWS_AS(io::cochain_from_json(json{{"degree", 1}}), ParseError);
    CHECK_THROWS_AS(io::presentation_from_json(json{{"generators", 1}}), ParseError);
    json bad_word = json{{"generators", 1}, {"relators", json::array({json::array({1})})}};
    CHECK_THROWS_AS(io::presentation_from_json(bad_word), ParseError);
}
