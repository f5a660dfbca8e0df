#include "flataff/fibration.hpp"

#include <algorithm>

#include "flataff/errors.hpp"

namespace flataff {

namespace {

const Word& witness_for(const FibrationData& d, int ambient_gen, int fiber_pos)
{
    auto it = d.witnesses.find({ambient_gen, fiber_pos});
    if (it == d.witnesses.end())
        throw InvalidFibration("missing conjugation witness for generator pair ("
                               + std::to_string(ambient_gen) + ", "
                               + std::to_string(fiber_pos) + ")");
    return it->second;
}

}  // namespace

Presentation fiber_presentation(const FibrationData& d)
{
    std::vector<int> pos(static_cast<std::size_t>(d.ambient.presentation.generator_count), -1);
    for (std::size_t j = 0; j < d.fiber_generators.size(); ++j)
        pos[static_cast<std::size_t>(d.fiber_generators[j])] = static_cast<int>(j);

    Presentation p;
    p.generator_count = static_cast<int>(d.fiber_generators.size());
    for (const Word& r : d.ambient.presentation.relators)
    {
        bool pure = std::all_of(r.letters.begin(), r.letters.end(), [&](const Letter& x) {
            return pos[static_cast<std::size_t>(x.generator)] >= 0;
        });
        if (!pure)
            continue;
        Word re;
        for (const Letter& x : r.letters)
            re.letters.push_back(Letter{pos[static_cast<std::size_t>(x.generator)], x.sign});
        p.relators.push_back(std::move(re));
    }
    return p;
}

CoefficientModule fiber_module(const FibrationData& d)
{
    CoefficientModule m;
    m.presentation = fiber_presentation(d);
    m.dim = d.split.fiber_dim;
    for (int g : d.fiber_generators)
    {
        BlockAffineMap b = block_decompose(d.ambient.images.at(static_cast<std::size_t>(g)), d.split);
        m.action.push_back(b.fiber_linear);
    }
    return m;
}

Word witness_in_ambient(const FibrationData& d, const Word& fiber_word)
{
    Word out;
    for (const Letter& x : fiber_word.letters)
        out.letters.push_back(
            Letter{d.fiber_generators.at(static_cast<std::size_t>(x.generator)), x.sign});
    return out;
}

FibrationReport validate_fibration(const FibrationData& d)
{
    FibrationReport report;
    auto fail = [&](std::string msg) {
        report.pass = false;
        report.violations.push_back(std::move(msg));
    };

    // (i) the ambient representation is a homomorphism
    RepresentationReport rep = verify_representation(d.ambient);
    if (!rep.pass)
        for (const RelatorFailure& f : rep.failures)
            fail("relator " + std::to_string(f.relator_index) + " does not evaluate to identity");

    // (ii) block form of every generator; fiber generators restrict to the
    // identity on the base
    const int k = d.ambient.presentation.generator_count;
    std::vector<BlockAffineMap> blocks;
    for (int g = 0; g < k; ++g)
    {
        try
        {
            blocks.push_back(block_decompose(d.ambient.images[static_cast<std::size_t>(g)], d.split));
        }
        catch (const NotBlockTriangular&)
        {
            fail("generator " + std::to_string(g) + " is not block-triangular for the split");
            return report;  // later checks need the block forms
        }
    }
    for (int g : d.fiber_generators)
    {
        const BlockAffineMap& b = blocks[static_cast<std::size_t>(g)];
        const Index m = d.split.base_dim;
        if (!mat_eq(b.base_linear, MatrixQ::Identity(m, m)) || !is_zero(b.base_translation))
            fail("fiber generator " + std::to_string(g) + " does not restrict to the identity on the base");
    }

    // (iii) conjugation witnesses
    for (int g = 0; g < k; ++g)
    {
        for (std::size_t j = 0; j < d.fiber_generators.size(); ++j)
        {
            const Word* w = nullptr;
            try
            {
                w = &witness_for(d, g, static_cast<int>(j));
            }
            catch (const InvalidFibration& e)
            {
                fail(e.what());
                continue;
            }
            AffineMap lhs = evaluate_word(d.ambient, witness_in_ambient(d, *w));
            const AffineMap& gm = d.ambient.images[static_cast<std::size_t>(g)];
            const AffineMap& fm =
                d.ambient.images[static_cast<std::size_t>(d.fiber_generators[j])];
            AffineMap rhs = compose(compose(gm, fm), invert(gm));
            if (!(lhs == rhs))
                fail("witness for (" + std::to_string(g) + ", " + std::to_string(j)
                     + ") does not evaluate to the conjugate");
        }
    }

    // (iv) couplings land in the fiber invariants
    try
    {
        MatrixQ invariants = h0(fiber_module(d));
        for (int g = 0; g < k; ++g)
        {
            if (!subspace_contains(invariants, blocks[static_cast<std::size_t>(g)].coupling))
                fail("coupling of generator " + std::to_string(g)
                     + " leaves H^0 of the fiber module");
        }
    }
    catch (const Error& e)
    {
        fail(std::string("fiber module invalid: ") + e.what());
    }

    // quotient data: fiber generators die in the base; relators map to words
    // trivial up to free reduction (anything deeper is an assumption)
    if (static_cast<int>(d.quotient_images.size()) != k)
        fail("quotient: one image word per ambient generator required");
    else
    {
        GroupHom quotient{d.ambient.presentation, d.base_presentation, d.quotient_images};
        for (int g : d.fiber_generators)
            if (!map_word(quotient, Word::single(g)).empty())
                fail("quotient image of fiber generator " + std::to_string(g) + " is nontrivial");
        for (std::size_t r = 0; r < d.ambient.presentation.relators.size(); ++r)
        {
            Word img = map_word(quotient, d.ambient.presentation.relators[r]);
            if (!img.empty())
                report.assumptions.push_back("relator " + std::to_string(r)
                                             + " maps to a word assumed trivial in the base");
        }
    }

    return report;
}

namespace {

struct FiberBlocks
{
    CoefficientModule module;
    CohomologySpaces spaces;
    std::vector<BlockAffineMap> fiber_blocks;  // one per fiber generator
};

FiberBlocks fiber_data(const FibrationData& d)
{
    FibrationReport report = validate_fibration(d);
    if (!report.pass)
        throw InvalidFibration("fibration data does not validate: " + report.violations.front());
    FiberBlocks fb;
    fb.module = fiber_module(d);
    fb.spaces = h1(fb.module);
    for (int g : d.fiber_generators)
        fb.fiber_blocks.push_back(
            block_decompose(d.ambient.images[static_cast<std::size_t>(g)], d.split));
    return fb;
}

}  // namespace

RadianceMap radiance_map(const FibrationData& d)
{
    FiberBlocks fb = fiber_data(d);
    const Index m = d.split.base_dim;

    RadianceMap rm;
    rm.spaces = fb.spaces;

    Cocycle1 constant;
    for (const BlockAffineMap& b : fb.fiber_blocks)
        constant.values.push_back(b.fiber_translation);
    if (!is_cocycle(fb.module, constant))
        throw InvalidFibration("fiber translations are not a cocycle");
    rm.constant_part = fb.spaces.h1_projector * stack_values(constant);

    rm.linear_part = MatrixQ::Zero(fb.spaces.h1_dim, m);
    for (Index j = 0; j < m; ++j)
    {
        Cocycle1 col;
        for (const BlockAffineMap& b : fb.fiber_blocks)
            col.values.push_back(b.coupling.col(j));
        if (!is_cocycle(fb.module, col))
            throw InvalidFibration("fiber couplings are not a cocycle");
        rm.linear_part.col(j) = fb.spaces.h1_projector * stack_values(col);
    }
    return rm;
}

bool is_alt(const FibrationData& d)
{
    return is_zero(radiance_map(d).linear_part);
}

MatrixQ induced_h1_action(const FibrationData& d, int ambient_gen)
{
    FiberBlocks fb = fiber_data(d);
    const int kf = static_cast<int>(d.fiber_generators.size());

    BlockAffineMap gb =
        block_decompose(d.ambient.images.at(static_cast<std::size_t>(ambient_gen)), d.split);
    const MatrixQ& b1 = gb.fiber_linear;
    MatrixQ b1_inv = inverse(b1);

    // intertwining: the module action of the witness word must equal the
    // conjugated action
    for (int j = 0; j < kf; ++j)
    {
        MatrixQ lhs = act_word(fb.module.action, witness_for(d, ambient_gen, j));
        MatrixQ rhs = b1 * fb.module.action[static_cast<std::size_t>(j)] * b1_inv;
        if (!mat_eq(lhs, rhs))
            throw NotIntertwining(j);
    }

    // The transport operator (T c)(gamma) = B^{-1} c(g gamma g^{-1}) realizes
    // the inverse of the induced action on H^1.
    const Index h = fb.spaces.h1_dim;
    MatrixQ t(h, h);
    for (Index col = 0; col < h; ++col)
    {
        Cocycle1 c = unstack_values(VectorQ(fb.spaces.h1_lift.col(col)), kf, fb.module.dim);
        Cocycle1 moved;
        for (int j = 0; j < kf; ++j)
            moved.values.push_back(
                b1_inv * cocycle_extend(fb.module, c, witness_for(d, ambient_gen, j)));
        if (!is_cocycle(fb.module, moved))
            throw InvalidFibration("transported cocycle violates the constraints");
        t.col(col) = fb.spaces.h1_projector * stack_values(moved);
    }
    return inverse(t);
}

EquivarianceReport equivariance_check(const FibrationData& d, int ambient_gen,
                                      const std::vector<VectorQ>& sample_points)
{
    RadianceMap rm = radiance_map(d);
    MatrixQ action = induced_h1_action(d, ambient_gen);
    BlockAffineMap gb =
        block_decompose(d.ambient.images.at(static_cast<std::size_t>(ambient_gen)), d.split);

    EquivarianceReport report;
    for (const VectorQ& x : sample_points)
    {
        if (x.size() != d.split.base_dim)
            throw DimensionMismatch("equivariance_check: sample has wrong dimension");
        VectorQ moved_point = gb.base_linear * x + gb.base_translation;
        VectorQ lhs = rm.constant_part + rm.linear_part * moved_point;
        VectorQ rhs = action * (rm.constant_part + rm.linear_part * x);
        PointCheck pc{x, vec_eq(lhs, rhs)};
        if (!pc.pass)
            report.pass = false;
        report.points.push_back(std::move(pc));
    }
    return report;
}

}  // namespace flataff
