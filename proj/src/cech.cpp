#include "flataff/cech.hpp"

#include <algorithm>

#include "flataff/errors.hpp"

namespace flataff {

std::vector<std::vector<int>> Nerve::simplices_of_dim(int k) const
{
    std::vector<std::vector<int>> out;
    for (const auto& s : simplices)
        if (static_cast<int>(s.size()) == k + 1)
            out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

bool Nerve::has_simplex(const std::vector<int>& s) const
{
    return std::find(simplices.begin(), simplices.end(), s) != simplices.end();
}

NerveReport validate_nerve(const Nerve& n)
{
    NerveReport report;
    auto fail = [&](std::string msg) {
        report.pass = false;
        report.violations.push_back(std::move(msg));
    };

    auto describe = [](const std::vector<int>& s) {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i)
            out += (i ? "-" : "") + std::to_string(s[i]);
        return out;
    };

    for (const auto& s : n.simplices)
    {
        if (s.empty())
        {
            fail("empty simplex tuple");
            continue;
        }
        for (std::size_t i = 0; i < s.size(); ++i)
        {
            if (s[i] < 0 || s[i] >= n.vertex_count)
                fail("vertex out of range in simplex " + describe(s));
            if (i > 0 && s[i] <= s[i - 1])
                fail("simplex tuple not strictly increasing: " + describe(s));
        }
        // faces obtained by dropping one vertex must be listed
        if (s.size() > 1)
        {
            for (std::size_t drop = 0; drop < s.size(); ++drop)
            {
                std::vector<int> face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop)
                        face.push_back(s[i]);
                if (!n.has_simplex(face))
                    fail("missing face " + describe(face) + " of simplex " + describe(s));
            }
        }
    }
    for (int v = 0; v < n.vertex_count; ++v)
        if (!n.has_simplex({v}))
            fail("vertex " + std::to_string(v) + " is not listed as a 0-simplex");
    return report;
}

LocalSystem::LocalSystem(Nerve nerve, Index dim,
                         std::map<std::pair<int, int>, MatrixQ> transitions)
    : nerve_(std::move(nerve)), dim_(dim), transitions_(std::move(transitions))
{
    for (const auto& [edge, t] : transitions_)
    {
        if (edge.first >= edge.second)
            throw ParseError("transitions must be keyed by increasing edges");
        if (t.rows() != dim_ || t.cols() != dim_)
            throw DimensionMismatch("transition matrix size does not match system dimension");
    }
}

MatrixQ LocalSystem::transition(int i, int j) const
{
    if (i == j)
        return MatrixQ::Identity(dim_, dim_);
    const bool forward = i < j;
    auto it = transitions_.find(forward ? std::make_pair(i, j) : std::make_pair(j, i));
    if (it == transitions_.end())
        throw Error("no transition stored for edge " + std::to_string(i) + "-"
                    + std::to_string(j));
    return forward ? it->second : inverse(it->second);
}

SystemReport validate_system(const LocalSystem& s)
{
    SystemReport report;
    auto fail = [&](std::string msg, std::vector<int> simplex = {}) {
        report.pass = false;
        report.violations.push_back(std::move(msg));
        if (!simplex.empty())
            report.offending_simplices.push_back(std::move(simplex));
    };

    NerveReport nerve_report = validate_nerve(s.nerve());
    if (!nerve_report.pass)
    {
        report.pass = false;
        report.violations = nerve_report.violations;
        return report;
    }

    for (const auto& e : s.nerve().simplices_of_dim(1))
    {
        auto it = s.stored_transitions().find({e[0], e[1]});
        if (it == s.stored_transitions().end())
        {
            fail("edge " + std::to_string(e[0]) + "-" + std::to_string(e[1])
                     + " has no transition",
                 e);
            continue;
        }
        if (determinant(it->second) == 0)
            fail("transition on edge " + std::to_string(e[0]) + "-" + std::to_string(e[1])
                     + " is singular",
                 e);
    }
    if (!report.pass)
        return report;

    for (const auto& t : s.nerve().simplices_of_dim(2))
    {
        const int i = t[0], j = t[1], k = t[2];
        if (!mat_eq(s.transition(i, k), MatrixQ(s.transition(i, j) * s.transition(j, k))))
            fail("flatness fails on triangle " + std::to_string(i) + "-" + std::to_string(j)
                     + "-" + std::to_string(k),
                 t);
    }
    return report;
}

bool Cochain::is_zero_cochain() const
{
    for (const auto& [s, v] : values)
        if (!is_zero(v))
            return false;
    return true;
}

Cochain zero_cochain(const LocalSystem& s, int degree)
{
    Cochain c;
    c.degree = degree;
    c.dim = s.dim();
    for (const auto& simplex : s.nerve().simplices_of_dim(degree))
        c.values[simplex] = VectorQ::Zero(s.dim());
    return c;
}

namespace {

const VectorQ& value_at(const Cochain& c, const std::vector<int>& simplex)
{
    auto it = c.values.find(simplex);
    if (it == c.values.end())
        throw Error("cochain has no value on a required simplex");
    return it->second;
}

}  // namespace

Cochain coboundary(const LocalSystem& s, const Cochain& c)
{
    if (c.dim != s.dim())
        throw DimensionMismatch("coboundary: cochain dimension does not match system");
    Cochain out;
    out.degree = c.degree + 1;
    out.dim = s.dim();
    for (const auto& simplex : s.nerve().simplices_of_dim(c.degree + 1))
    {
        std::vector<int> face(simplex.begin() + 1, simplex.end());
        VectorQ acc = s.transition(simplex[0], simplex[1]) * value_at(c, face);
        int sign = -1;
        for (std::size_t drop = 1; drop < simplex.size(); ++drop)
        {
            face.clear();
            for (std::size_t i = 0; i < simplex.size(); ++i)
                if (i != drop)
                    face.push_back(simplex[i]);
            if (sign > 0)
                acc += value_at(c, face);
            else
                acc -= value_at(c, face);
            sign = -sign;
        }
        out.values[simplex] = std::move(acc);
    }
    return out;
}

VectorQ cochain_to_vector(const LocalSystem& s, const Cochain& c)
{
    const auto simplices = s.nerve().simplices_of_dim(c.degree);
    VectorQ v(static_cast<Index>(simplices.size()) * s.dim());
    for (Index i = 0; i < static_cast<Index>(simplices.size()); ++i)
        v.segment(i * s.dim(), s.dim()) = value_at(c, simplices[static_cast<std::size_t>(i)]);
    return v;
}

Cochain vector_to_cochain(const LocalSystem& s, int degree, const VectorQ& v)
{
    const auto simplices = s.nerve().simplices_of_dim(degree);
    if (v.size() != static_cast<Index>(simplices.size()) * s.dim())
        throw DimensionMismatch("vector_to_cochain: size mismatch");
    Cochain c;
    c.degree = degree;
    c.dim = s.dim();
    for (Index i = 0; i < static_cast<Index>(simplices.size()); ++i)
        c.values[simplices[static_cast<std::size_t>(i)]] = v.segment(i * s.dim(), s.dim());
    return c;
}

MatrixQ delta_matrix(const LocalSystem& s, int k)
{
    const auto domain = s.nerve().simplices_of_dim(k);
    const auto range = s.nerve().simplices_of_dim(k + 1);
    MatrixQ d = MatrixQ::Zero(static_cast<Index>(range.size()) * s.dim(),
                              static_cast<Index>(domain.size()) * s.dim());
    std::map<std::vector<int>, Index> index;
    for (Index i = 0; i < static_cast<Index>(domain.size()); ++i)
        index[domain[static_cast<std::size_t>(i)]] = i;

    for (Index r = 0; r < static_cast<Index>(range.size()); ++r)
    {
        const auto& simplex = range[static_cast<std::size_t>(r)];
        for (std::size_t drop = 0; drop < simplex.size(); ++drop)
        {
            std::vector<int> face;
            for (std::size_t i = 0; i < simplex.size(); ++i)
                if (i != drop)
                    face.push_back(simplex[i]);
            MatrixQ block;
            if (drop == 0)
                block = s.transition(simplex[0], simplex[1]);
            else if (drop % 2 == 0)
                block = MatrixQ::Identity(s.dim(), s.dim());
            else
                block = -MatrixQ::Identity(s.dim(), s.dim());
            d.block(r * s.dim(), index.at(face) * s.dim(), s.dim(), s.dim()) += block;
        }
    }
    return d;
}

CechCohomology cohomology(const LocalSystem& s, int k)
{
    CechCohomology out;
    MatrixQ dk = delta_matrix(s, k);
    out.cocycle_basis = kernel_basis(dk);
    if (k == 0)
    {
        const Index n = dk.cols();
        out.coboundary_basis = MatrixQ::Zero(n, 0);
    }
    else
    {
        MatrixQ dprev = delta_matrix(s, k - 1);
        MatrixQ image(dprev.rows(), dprev.cols());
        image = dprev;
        out.coboundary_basis = column_space_basis(image);
    }
    out.quotient = build_quotient(out.cocycle_basis, out.coboundary_basis);
    out.dim = out.quotient.quotient_dim;
    return out;
}

CoboundarySolution solve_coboundary(const LocalSystem& s, const Cochain& z)
{
    if (z.degree < 1)
        throw DimensionMismatch("solve_coboundary: degree must be at least 1");
    if (!coboundary(s, z).is_zero_cochain())
        throw NotACocycle("solve_coboundary: input is not a cocycle");

    MatrixQ dprev = delta_matrix(s, z.degree - 1);
    VectorQ rhs = cochain_to_vector(s, z);
    CoboundarySolution sol;
    if (auto a = solve_linear(dprev, rhs))
    {
        sol.solved = true;
        sol.primitive = vector_to_cochain(s, z.degree - 1, *a);
        return sol;
    }
    CechCohomology coh = cohomology(s, z.degree);
    sol.certificate = coh.quotient.projector * rhs;
    return sol;
}

AffineMap gluing_at(const GluingFamily& u, int i, int j)
{
    if (i == j)
        throw Error("gluing_at: degenerate edge");
    const bool forward = i < j;
    auto it = u.find(forward ? std::make_pair(i, j) : std::make_pair(j, i));
    if (it == u.end())
        throw Error("no gluing map for edge " + std::to_string(i) + "-" + std::to_string(j));
    return forward ? it->second : invert(it->second);
}

DefectResult nonabelian_defect(const Nerve& n, const GluingFamily& u, Index translation_dim)
{
    for (const auto& [edge, map] : u)
    {
        if (edge.first >= edge.second)
            throw ParseError("gluing maps must be keyed by increasing edges");
        if (map.dim() != translation_dim)
            throw DimensionMismatch("gluing map dimension mismatch");
    }

    Cochain defect;
    defect.degree = 2;
    defect.dim = translation_dim;
    std::vector<std::vector<int>> bad;
    for (const auto& t : n.simplices_of_dim(2))
    {
        AffineMap h = compose(compose(gluing_at(u, t[0], t[1]), gluing_at(u, t[1], t[2])),
                              invert(gluing_at(u, t[0], t[2])));
        if (!h.is_translation())
        {
            bad.push_back(t);
            continue;
        }
        defect.values[t] = h.translation();
    }
    if (!bad.empty())
        throw NotTranslational(std::move(bad));

    std::map<std::pair<int, int>, MatrixQ> linear;
    for (const auto& e : n.simplices_of_dim(1))
        linear[{e[0], e[1]}] = gluing_at(u, e[0], e[1]).linear();
    return DefectResult{LocalSystem(n, translation_dim, std::move(linear)), std::move(defect)};
}

}  // namespace flataff
