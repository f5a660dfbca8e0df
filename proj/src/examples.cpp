#include "flataff/examples.hpp"

#include <initializer_list>

#include "flataff/errors.hpp"

namespace flataff {

namespace {

MatrixQ mat(std::initializer_list<std::initializer_list<int>> rows)
{
    const Index r = static_cast<Index>(rows.size());
    const Index c = static_cast<Index>(rows.begin()->size());
    MatrixQ m(r, c);
    Index i = 0;
    for (const auto& row : rows)
    {
        Index j = 0;
        for (int x : row)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

VectorQ vec(std::initializer_list<int> entries)
{
    VectorQ v(static_cast<Index>(entries.size()));
    Index i = 0;
    for (int x : entries)
        v(i++) = x;
    return v;
}

Word word(std::initializer_list<Letter> letters)
{
    Word w;
    w.letters = letters;
    return w;
}

Word commutator(int a, int b)
{
    return word({{a, 1}, {b, 1}, {a, -1}, {b, -1}});
}

/** Rank-3 presentation <g1,g2,g3 | [g1,g2], [g1,g3], g3 g2 g3^-1 g2^-1 g1^-1>. */
Presentation heisenberg_like()
{
    Presentation p;
    p.generator_count = 3;
    p.relators = {commutator(0, 1), commutator(0, 2),
                  word({{2, 1}, {1, 1}, {2, -1}, {1, -1}, {0, -1}})};
    return p;
}

Example gamma3()
{
    Example e;
    e.name = "gamma3";
    e.description = "rank-3 nil-holonomy group acting on Q^3, coordinates (x, y, z)";
    AffineRepresentation rep;
    rep.presentation = heisenberg_like();
    rep.dim = 3;
    rep.images = {AffineMap(MatrixQ::Identity(3, 3), vec({1, 0, 0})),
                  AffineMap(MatrixQ::Identity(3, 3), vec({0, 1, 0})),
                  AffineMap(mat({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), vec({0, 0, 1}))};
    e.representation = rep;
    return e;
}

Example gamma3_p3()
{
    Example e;
    e.name = "gamma3-p3";
    e.description = "gamma3 fibered over the g3 direction, coordinates (z, x, y)";
    AffineRepresentation rep;
    rep.presentation = heisenberg_like();
    rep.dim = 3;
    rep.images = {AffineMap(MatrixQ::Identity(3, 3), vec({0, 1, 0})),
                  AffineMap(MatrixQ::Identity(3, 3), vec({0, 0, 1})),
                  AffineMap(mat({{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}), vec({1, 0, 0}))};

    Presentation base;
    base.generator_count = 1;

    FibrationData d{std::move(rep),
                    BlockSplit(1, 2),
                    {0, 1},
                    {},
                    std::move(base),
                    {Word{}, Word{}, Word::single(0)},
                    {2, 0, 1}};
    d.witnesses[{0, 0}] = Word::single(0);
    d.witnesses[{0, 1}] = Word::single(1);
    d.witnesses[{1, 0}] = Word::single(0);
    d.witnesses[{1, 1}] = Word::single(1);
    d.witnesses[{2, 0}] = Word::single(0);
    d.witnesses[{2, 1}] = word({{0, 1}, {1, 1}});
    e.fibration = std::move(d);
    return e;
}

Example gamma3_p2()
{
    Example e;
    e.name = "gamma3-p2";
    e.description = "gamma3 fibered over the g2 direction, coordinates (y, x, z)";
    AffineRepresentation rep;
    rep.presentation = heisenberg_like();
    rep.dim = 3;
    rep.images = {AffineMap(MatrixQ::Identity(3, 3), vec({0, 1, 0})),
                  AffineMap(MatrixQ::Identity(3, 3), vec({1, 0, 0})),
                  AffineMap(mat({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}), vec({0, 0, 1}))};

    Presentation base;
    base.generator_count = 1;

    FibrationData d{std::move(rep),
                    BlockSplit(1, 2),
                    {0, 2},
                    {},
                    std::move(base),
                    {Word{}, Word::single(0), Word{}},
                    {1, 0, 2}};
    d.witnesses[{0, 0}] = Word::single(0);
    d.witnesses[{0, 1}] = Word::single(1);
    d.witnesses[{1, 0}] = Word::single(0);
    d.witnesses[{1, 1}] = word({{0, -1}, {1, 1}});
    d.witnesses[{2, 0}] = Word::single(0);
    d.witnesses[{2, 1}] = Word::single(1);
    e.fibration = std::move(d);
    return e;
}

Example gamma3_p2p1()
{
    Example e;
    e.name = "gamma3-p2p1";
    e.description = "gamma3 over the g2 direction with fiber order (g3, g1), coordinates (y, z, x)";
    AffineRepresentation rep;
    rep.presentation = heisenberg_like();
    rep.dim = 3;
    rep.images = {AffineMap(MatrixQ::Identity(3, 3), vec({0, 0, 1})),
                  AffineMap(MatrixQ::Identity(3, 3), vec({1, 0, 0})),
                  AffineMap(mat({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}), vec({0, 1, 0}))};

    Presentation base;
    base.generator_count = 1;

    FibrationData d{std::move(rep),
                    BlockSplit(1, 2),
                    {2, 0},
                    {},
                    std::move(base),
                    {Word{}, Word::single(0), Word{}},
                    {1, 2, 0}};
    d.witnesses[{0, 0}] = Word::single(0);
    d.witnesses[{0, 1}] = Word::single(1);
    d.witnesses[{1, 0}] = word({{1, -1}, {0, 1}});
    d.witnesses[{1, 1}] = Word::single(1);
    d.witnesses[{2, 0}] = Word::single(0);
    d.witnesses[{2, 1}] = Word::single(1);
    e.fibration = std::move(d);
    return e;
}

Example torus2()
{
    Example e;
    e.name = "torus2";
    e.description = "Z^2 acting on Q^2 by the standard lattice translations";
    AffineRepresentation rep;
    rep.presentation.generator_count = 2;
    rep.presentation.relators = {commutator(0, 1)};
    rep.dim = 2;
    rep.images = {AffineMap(MatrixQ::Identity(2, 2), vec({1, 0})),
                  AffineMap(MatrixQ::Identity(2, 2), vec({0, 1}))};
    e.representation = rep;
    return e;
}

Example torus2_collinear()
{
    Example e;
    e.name = "torus2-collinear";
    e.description = "Z^2 acting on Q^2 by collinear translations (degenerate)";
    AffineRepresentation rep;
    rep.presentation.generator_count = 2;
    rep.presentation.relators = {commutator(0, 1)};
    rep.dim = 2;
    rep.images = {AffineMap(MatrixQ::Identity(2, 2), vec({1, 1})),
                  AffineMap(MatrixQ::Identity(2, 2), vec({2, 2}))};
    e.representation = rep;
    return e;
}

Nerve circle_nerve()
{
    Nerve n;
    n.vertex_count = 3;
    n.simplices = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}};
    return n;
}

Example circle3()
{
    Example e;
    e.name = "circle3";
    e.description = "triangulated circle with the constant rank-1 system";
    std::map<std::pair<int, int>, MatrixQ> t;
    t[{0, 1}] = MatrixQ::Identity(1, 1);
    t[{0, 2}] = MatrixQ::Identity(1, 1);
    t[{1, 2}] = MatrixQ::Identity(1, 1);
    e.system = LocalSystem(circle_nerve(), 1, std::move(t));
    return e;
}

Nerve tetra_nerve()
{
    Nerve n;
    n.vertex_count = 4;
    n.simplices = {{0},       {1},       {2},       {3},       {0, 1},    {0, 2},
                   {0, 3},    {1, 2},    {1, 3},    {2, 3},    {0, 1, 2}, {0, 1, 3},
                   {0, 2, 3}, {1, 2, 3}};
    return n;
}

Example tetra4()
{
    Example e;
    e.name = "tetra4";
    e.description =
        "boundary of the tetrahedron with the constant rank-1 system and a "
        "one-level gluing ladder whose defect class is nonzero";
    std::map<std::pair<int, int>, MatrixQ> t;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            t[{i, j}] = MatrixQ::Identity(1, 1);
    LocalSystem system(tetra_nerve(), 1, std::move(t));
    e.system = system;

    auto scale = [](int num, int s) {
        MatrixQ m(1, 1);
        m(0, 0) = num;
        VectorQ v(1);
        v(0) = s;
        return AffineMap(std::move(m), std::move(v));
    };
    GluingFamily u;
    u.emplace(std::make_pair(0, 1), scale(2, 0));
    u.emplace(std::make_pair(0, 2), scale(2, 0));
    u.emplace(std::make_pair(0, 3), scale(2, 0));
    u.emplace(std::make_pair(1, 2), scale(1, 1));
    u.emplace(std::make_pair(1, 3), scale(1, 0));
    u.emplace(std::make_pair(2, 3), scale(1, 0));

    LadderSpec spec;
    spec.base_nerve = tetra_nerve();
    spec.levels.push_back(LevelData{system, std::move(u)});
    e.ladder = std::move(spec);
    return e;
}

/** Every dataset re-verifies its expected results on load. */
void self_check(const Example& e)
{
    auto require = [&](bool ok, const char* what) {
        if (!ok)
            throw Error("example " + e.name + " failed its self-check: " + what);
    };

    if (e.name == "gamma3")
        require(verify_representation(*e.representation).pass, "relators must hold");
    else if (e.name == "gamma3-p3")
        require(is_alt(*e.fibration), "expected affinely locally trivial");
    else if (e.name == "gamma3-p2" || e.name == "gamma3-p2p1")
        require(!is_alt(*e.fibration), "expected a nonconstant radiance map");
    else if (e.name == "torus2")
        require(completeness_det_test(*e.representation).det == 1, "expected det 1");
    else if (e.name == "torus2-collinear")
        require(completeness_det_test(*e.representation).det == 0, "expected det 0");
    else if (e.name == "circle3")
        require(cohomology(*e.system, 0).dim == 1 && cohomology(*e.system, 1).dim == 1,
                "expected H^0 = H^1 = Q");
    else if (e.name == "tetra4")
    {
        require(cohomology(*e.system, 0).dim == 1 && cohomology(*e.system, 1).dim == 0
                    && cohomology(*e.system, 2).dim == 1,
                "expected H^* = (1, 0, 1)");
        LadderVerdict v = run_ladder(*e.ladder);
        require(v.status == LadderStatus::Obstructed && v.obstructed_rung == 1
                    && !is_zero(v.certificate),
                "expected an obstruction at the first rung");
    }

    if (e.fibration)
        require(validate_fibration(*e.fibration).pass, "fibration data must validate");
    if (e.system)
        require(validate_system(*e.system).pass, "local system must validate");
}

}  // namespace

std::vector<std::string> example_names()
{
    return {"circle3", "gamma3",  "gamma3-p2", "gamma3-p2p1",
            "gamma3-p3", "tetra4", "torus2",    "torus2-collinear"};
}

Example load_example(const std::string& name)
{
    Example e;
    if (name == "gamma3")
        e = gamma3();
    else if (name == "gamma3-p3")
        e = gamma3_p3();
    else if (name == "gamma3-p2")
        e = gamma3_p2();
    else if (name == "gamma3-p2p1")
        e = gamma3_p2p1();
    else if (name == "torus2")
        e = torus2();
    else if (name == "torus2-collinear")
        e = torus2_collinear();
    else if (name == "circle3")
        e = circle3();
    else if (name == "tetra4")
        e = tetra4();
    else
        throw UnknownExample(name, example_names());
    self_check(e);
    return e;
}

}  // namespace flataff
