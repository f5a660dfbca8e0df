#include "flataff/group.hpp"

#include "flataff/errors.hpp"

namespace flataff {

Word concat(const Word& u, const Word& v)
{
    Word w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
}

Word inverse_word(const Word& w)
{
    Word inv;
    inv.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        inv.letters.push_back(Letter{it->generator, -it->sign});
    return inv;
}

Word free_reduce(const Word& w)
{
    Word out;
    for (const Letter& x : w.letters)
    {
        if (!out.letters.empty() && out.letters.back().generator == x.generator
            && out.letters.back().sign == -x.sign)
            out.letters.pop_back();
        else
            out.letters.push_back(x);
    }
    return out;
}

void validate_word(const Word& w, int generator_count)
{
    for (const Letter& x : w.letters)
    {
        if (x.generator < 0 || x.generator >= generator_count)
            throw DimensionMismatch("word letter index out of range");
        if (x.sign != 1 && x.sign != -1)
            throw ParseError("word letter sign must be +1 or -1");
    }
}

void validate_presentation(const Presentation& p)
{
    if (p.generator_count < 0)
        throw ParseError("negative generator count");
    for (const Word& r : p.relators)
        validate_word(r, p.generator_count);
}

AffineMap evaluate_word(const AffineRepresentation& rep, const Word& w)
{
    validate_word(w, rep.presentation.generator_count);
    AffineMap acc = AffineMap::identity(rep.dim);
    for (const Letter& x : w.letters)
    {
        const AffineMap& g = rep.images.at(static_cast<std::size_t>(x.generator));
        acc = compose(acc, x.sign > 0 ? g : invert(g));
    }
    return acc;
}

RepresentationReport verify_representation(const AffineRepresentation& rep)
{
    validate_presentation(rep.presentation);
    if (static_cast<int>(rep.images.size()) != rep.presentation.generator_count)
        throw DimensionMismatch("one image per generator required");
    for (const AffineMap& g : rep.images)
        if (g.dim() != rep.dim)
            throw DimensionMismatch("image dimension does not match representation");

    RepresentationReport report;
    for (std::size_t i = 0; i < rep.presentation.relators.size(); ++i)
    {
        AffineMap v = evaluate_word(rep, rep.presentation.relators[i]);
        if (!v.is_identity())
        {
            report.pass = false;
            report.failures.push_back(RelatorFailure{static_cast<int>(i), std::move(v)});
        }
    }
    return report;
}

Word map_word(const GroupHom& h, const Word& w)
{
    validate_word(w, h.source.generator_count);
    Word out;
    for (const Letter& x : w.letters)
    {
        const Word& img = h.images.at(static_cast<std::size_t>(x.generator));
        Word piece = x.sign > 0 ? img : inverse_word(img);
        out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
    }
    return free_reduce(out);
}

MatrixQ act_word(const std::vector<MatrixQ>& action, const Word& w)
{
    const Index l = action.empty() ? 0 : action.front().rows();
    MatrixQ acc = MatrixQ::Identity(l, l);
    for (const Letter& x : w.letters)
    {
        const MatrixQ& m = action.at(static_cast<std::size_t>(x.generator));
        acc = acc * (x.sign > 0 ? m : inverse(m));
    }
    return acc;
}

MatrixQ fox_jacobian(const Presentation& p, const std::vector<MatrixQ>& action)
{
    validate_presentation(p);
    if (static_cast<int>(action.size()) != p.generator_count)
        throw DimensionMismatch("fox_jacobian: one action matrix per generator");
    const Index l = action.empty() ? 0 : action.front().rows();
    for (const MatrixQ& m : action)
        if (m.rows() != l || m.cols() != l)
            throw DimensionMismatch("fox_jacobian: action matrices must share one size");

    const Index k = p.generator_count;
    const Index nrel = static_cast<Index>(p.relators.size());
    MatrixQ jac = MatrixQ::Zero(nrel * l, k * l);
    for (Index r = 0; r < nrel; ++r)
    {
        MatrixQ transport = MatrixQ::Identity(l, l);
        for (const Letter& x : p.relators[static_cast<std::size_t>(r)].letters)
        {
            const Index g = x.generator;
            if (x.sign > 0)
            {
                jac.block(r * l, g * l, l, l) += transport;
                transport = transport * action[static_cast<std::size_t>(g)];
            }
            else
            {
                transport = transport * inverse(action[static_cast<std::size_t>(g)]);
                jac.block(r * l, g * l, l, l) -= transport;
            }
        }
    }
    return jac;
}

}  // namespace flataff
