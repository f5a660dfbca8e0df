#include "flataff/cohomology.hpp"

#include "flataff/errors.hpp"

namespace flataff {

void validate_module(const CoefficientModule& m)
{
    validate_presentation(m.presentation);
    if (static_cast<int>(m.action.size()) != m.presentation.generator_count)
        throw DimensionMismatch("module: one action matrix per generator");
    for (const MatrixQ& a : m.action)
    {
        if (a.rows() != m.dim || a.cols() != m.dim)
            throw DimensionMismatch("module: action matrix size mismatch");
        if (determinant(a) == 0)
            throw SingularLinearPart();
    }
    for (const Word& r : m.presentation.relators)
    {
        if (!mat_eq(act_word(m.action, r), MatrixQ::Identity(m.dim, m.dim)))
            throw InvalidRepresentation("module action does not kill a relator");
    }
}

VectorQ stack_values(const Cocycle1& c)
{
    const Index l = c.values.empty() ? 0 : c.values.front().size();
    VectorQ v(static_cast<Index>(c.values.size()) * l);
    for (Index i = 0; i < static_cast<Index>(c.values.size()); ++i)
        v.segment(i * l, l) = c.values[static_cast<std::size_t>(i)];
    return v;
}

Cocycle1 unstack_values(const VectorQ& v, int generator_count, Index l)
{
    if (v.size() != generator_count * l)
        throw DimensionMismatch("unstack_values: size mismatch");
    Cocycle1 c;
    for (int i = 0; i < generator_count; ++i)
        c.values.push_back(v.segment(i * l, l));
    return c;
}

bool is_cocycle(const CoefficientModule& m, const Cocycle1& c)
{
    MatrixQ jac = fox_jacobian(m.presentation, m.action);
    VectorQ v = stack_values(c);
    if (v.size() != jac.cols())
        throw DimensionMismatch("is_cocycle: value count mismatch");
    return is_zero(VectorQ(jac * v));
}

MatrixQ h0(const CoefficientModule& m)
{
    validate_module(m);
    const Index k = m.presentation.generator_count;
    MatrixQ stacked(k * m.dim, m.dim);
    for (Index i = 0; i < k; ++i)
        stacked.middleRows(i * m.dim, m.dim) =
            m.action[static_cast<std::size_t>(i)] - MatrixQ::Identity(m.dim, m.dim);
    return kernel_basis(stacked);
}

CohomologySpaces h1(const CoefficientModule& m)
{
    validate_module(m);
    const Index k = m.presentation.generator_count;
    const Index l = m.dim;

    MatrixQ z1 = kernel_basis(fox_jacobian(m.presentation, m.action));

    // B^1 is spanned by the coboundaries of the standard basis vectors:
    // column v gives the cocycle gamma_i -> (action(gamma_i) - I) v.
    MatrixQ b1(k * l, l);
    for (Index i = 0; i < k; ++i)
        b1.middleRows(i * l, l) =
            m.action[static_cast<std::size_t>(i)] - MatrixQ::Identity(l, l);

    QuotientBasis q = build_quotient(z1, b1);
    CohomologySpaces s;
    s.z1_basis = q.z_basis;
    s.b1_basis = q.b_basis;
    s.h1_dim = q.quotient_dim;
    s.h1_projector = q.projector;
    s.h1_lift = q.completion;
    return s;
}

VectorQ cocycle_extend(const CoefficientModule& m, const Cocycle1& c, const Word& w)
{
    validate_word(w, m.presentation.generator_count);
    VectorQ acc = VectorQ::Zero(m.dim);
    MatrixQ transport = MatrixQ::Identity(m.dim, m.dim);
    for (const Letter& x : w.letters)
    {
        const std::size_t g = static_cast<std::size_t>(x.generator);
        if (x.sign > 0)
        {
            acc += transport * c.values.at(g);
            transport = transport * m.action[g];
        }
        else
        {
            transport = transport * inverse(m.action[g]);
            acc -= transport * c.values.at(g);
        }
    }
    return acc;
}

CoefficientModule linear_module(const AffineRepresentation& rep)
{
    CoefficientModule m;
    m.presentation = rep.presentation;
    m.dim = rep.dim;
    for (const AffineMap& g : rep.images)
        m.action.push_back(g.linear());
    return m;
}

RadianceClass radiance_class(const AffineRepresentation& rep)
{
    RepresentationReport report = verify_representation(rep);
    if (!report.pass)
        throw InvalidRepresentation("radiance_class: relators do not evaluate to identity");

    CoefficientModule m = linear_module(rep);
    Cocycle1 c;
    for (const AffineMap& g : rep.images)
        c.values.push_back(g.translation());

    RadianceClass cls;
    cls.spaces = h1(m);
    cls.coordinates = cls.spaces.h1_projector * stack_values(c);
    return cls;
}

RadianceClass gauge_act(const CoefficientModule& m, const GaugeElement& g,
                        const RadianceClass& cls)
{
    validate_module(m);
    const int k = m.presentation.generator_count;
    if (static_cast<int>(g.automorphism.images.size()) != k
        || static_cast<int>(g.inverse_images.size()) != k)
        throw DimensionMismatch("gauge element: one image word per generator");

    MatrixQ bg_inv = inverse(g.bg);
    for (int i = 0; i < k; ++i)
    {
        MatrixQ lhs = act_word(m.action, g.automorphism.images[static_cast<std::size_t>(i)]);
        MatrixQ rhs = g.bg * m.action[static_cast<std::size_t>(i)] * bg_inv;
        if (!mat_eq(lhs, rhs))
            throw NotIntertwining(i);
    }

    Cocycle1 rep_cocycle =
        unstack_values(cls.spaces.h1_lift * cls.coordinates, k, m.dim);
    Cocycle1 moved;
    for (int i = 0; i < k; ++i)
        moved.values.push_back(
            g.bg * cocycle_extend(m, rep_cocycle, g.inverse_images[static_cast<std::size_t>(i)]));

    if (!is_cocycle(m, moved))
        throw Error("gauge_act: moved values violate the cocycle constraints");

    RadianceClass out;
    out.spaces = cls.spaces;
    out.coordinates = cls.spaces.h1_projector * stack_values(moved);
    return out;
}

GaugeVerdict gauge_equivalent(const CoefficientModule& m, const RadianceClass& cls1,
                              const RadianceClass& cls2,
                              const std::vector<GaugeElement>& candidates)
{
    for (std::size_t i = 0; i < candidates.size(); ++i)
    {
        RadianceClass moved = gauge_act(m, candidates[i], cls1);
        if (vec_eq(moved.coordinates, cls2.coordinates))
            return GaugeVerdict{true, static_cast<int>(i)};
    }
    return GaugeVerdict{false, -1};
}

CompletenessVerdict completeness_det_test(const AffineRepresentation& rep)
{
    const Index l = rep.dim;
    if (static_cast<Index>(rep.presentation.generator_count) != l)
        throw UnsupportedHolonomy("generator count must equal the dimension");
    for (const AffineMap& g : rep.images)
        if (!g.is_translation())
            throw UnsupportedHolonomy("linear holonomy must be trivial");
    for (const Word& r : rep.presentation.relators)
    {
        std::vector<long> exponent(static_cast<std::size_t>(rep.presentation.generator_count), 0);
        for (const Letter& x : r.letters)
            exponent[static_cast<std::size_t>(x.generator)] += x.sign;
        for (long e : exponent)
            if (e != 0)
                throw UnsupportedHolonomy("presentation is not free-abelian");
    }

    MatrixQ t(l, l);
    for (Index i = 0; i < l; ++i)
        t.col(i) = rep.images[static_cast<std::size_t>(i)].translation();
    CompletenessVerdict v;
    v.det = determinant(t);
    v.nonzero = v.det != 0;
    return v;
}

}  // namespace flataff
