#include "flataff/io.hpp"

#include <sstream>

#include "flataff/errors.hpp"

namespace flataff::io {

namespace {

std::vector<int> key_to_tuple(const std::string& key)
{
    std::vector<int> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, '-'))
    {
        try
        {
            out.push_back(std::stoi(part));
        }
        catch (const std::exception&)
        {
            throw ParseError("malformed simplex key: " + key);
        }
    }
    if (out.empty())
        throw ParseError("empty simplex key");
    return out;
}

std::string tuple_to_key(const std::vector<int>& t)
{
    std::string key;
    for (std::size_t i = 0; i < t.size(); ++i)
        key += (i ? "-" : "") + std::to_string(t[i]);
    return key;
}

template <typename T>
T expect(const json& j, const char* field)
{
    if (!j.contains(field))
        throw ParseError(std::string("missing field: ") + field);
    try
    {
        return j.at(field).get<T>();
    }
    catch (const json::exception&)
    {
        throw ParseError(std::string("malformed field: ") + field);
    }
}

const json& expect_json(const json& j, const char* field)
{
    if (!j.contains(field))
        throw ParseError(std::string("missing field: ") + field);
    return j.at(field);
}

}  // namespace

json rational_to_json(const Rational& r)
{
    return format_rational(r);
}

Rational rational_from_json(const json& j)
{
    if (!j.is_string())
        throw ParseError("rationals must be strings \"p/q\"");
    try
    {
        return parse_rational(j.get<std::string>());
    }
    catch (const std::invalid_argument& e)
    {
        throw ParseError(e.what());
    }
}

json vector_to_json(const VectorQ& v)
{
    json out = json::array();
    for (Index i = 0; i < v.size(); ++i)
        out.push_back(rational_to_json(v(i)));
    return out;
}

VectorQ vector_from_json(const json& j)
{
    if (!j.is_array())
        throw ParseError("vector must be an array");
    VectorQ v(static_cast<Index>(j.size()));
    for (Index i = 0; i < v.size(); ++i)
        v(i) = rational_from_json(j.at(static_cast<std::size_t>(i)));
    return v;
}

json matrix_to_json(const MatrixQ& m)
{
    json out = json::array();
    for (Index i = 0; i < m.rows(); ++i)
    {
        json row = json::array();
        for (Index k = 0; k < m.cols(); ++k)
            row.push_back(rational_to_json(m(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

MatrixQ matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty() || !j.at(0).is_array())
        throw ParseError("matrix must be a nonempty array of rows");
    const Index rows = static_cast<Index>(j.size());
    const Index cols = static_cast<Index>(j.at(0).size());
    MatrixQ m(rows, cols);
    for (Index i = 0; i < rows; ++i)
    {
        const json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw ParseError("ragged matrix rows");
        for (Index k = 0; k < cols; ++k)
            m(i, k) = rational_from_json(row.at(static_cast<std::size_t>(k)));
    }
    return m;
}

json affine_to_json(const AffineMap& f)
{
    return json{{"dim", f.dim()},
                {"linear", matrix_to_json(f.linear())},
                {"translation", vector_to_json(f.translation())}};
}

AffineMap affine_from_json(const json& j)
{
    MatrixQ linear = matrix_from_json(expect_json(j, "linear"));
    VectorQ translation = vector_from_json(expect_json(j, "translation"));
    if (j.contains("dim") && expect<Index>(j, "dim") != linear.rows())
        throw ParseError("affine map dim field disagrees with the linear part");
    try
    {
        return AffineMap(std::move(linear), std::move(translation));
    }
    catch (const Error& e)
    {
        throw ParseError(e.what());
    }
}

json word_to_json(const Word& w)
{
    json out = json::array();
    for (const Letter& x : w.letters)
        out.push_back(json::array({x.generator, x.sign}));
    return out;
}

Word word_from_json(const json& j)
{
    if (!j.is_array())
        throw ParseError("word must be an array of [index, sign] pairs");
    Word w;
    for (const json& item : j)
    {
        if (!item.is_array() || item.size() != 2)
            throw ParseError("word letter must be [index, sign]");
        w.letters.push_back(Letter{item.at(0).get<int>(), item.at(1).get<int>()});
    }
    return w;
}

json presentation_to_json(const Presentation& p)
{
    json relators = json::array();
    for (const Word& r : p.relators)
        relators.push_back(word_to_json(r));
    return json{{"generators", p.generator_count}, {"relators", std::move(relators)}};
}

Presentation presentation_from_json(const json& j)
{
    Presentation p;
    p.generator_count = expect<int>(j, "generators");
    for (const json& r : expect_json(j, "relators"))
        p.relators.push_back(word_from_json(r));
    try
    {
        validate_presentation(p);
    }
    catch (const Error& e)
    {
        throw ParseError(e.what());
    }
    return p;
}

json representation_to_json(const AffineRepresentation& r)
{
    json images = json::array();
    for (const AffineMap& g : r.images)
        images.push_back(affine_to_json(g));
    return json{{"presentation", presentation_to_json(r.presentation)},
                {"dim", r.dim},
                {"images", std::move(images)}};
}

AffineRepresentation representation_from_json(const json& j)
{
    AffineRepresentation r;
    r.presentation = presentation_from_json(expect_json(j, "presentation"));
    r.dim = expect<Index>(j, "dim");
    for (const json& g : expect_json(j, "images"))
        r.images.push_back(affine_from_json(g));
    if (static_cast<int>(r.images.size()) != r.presentation.generator_count)
        throw ParseError("representation needs one image per generator");
    for (const AffineMap& g : r.images)
        if (g.dim() != r.dim)
            throw ParseError("image dimension disagrees with representation");
    return r;
}

json module_to_json(const CoefficientModule& m)
{
    json action = json::array();
    for (const MatrixQ& a : m.action)
        action.push_back(matrix_to_json(a));
    return json{{"presentation", presentation_to_json(m.presentation)},
                {"dim", m.dim},
                {"action", std::move(action)}};
}

CoefficientModule module_from_json(const json& j)
{
    CoefficientModule m;
    m.presentation = presentation_from_json(expect_json(j, "presentation"));
    m.dim = expect<Index>(j, "dim");
    for (const json& a : expect_json(j, "action"))
        m.action.push_back(matrix_from_json(a));
    return m;
}

json gauge_to_json(const GaugeElement& g)
{
    json images = json::array();
    for (const Word& w : g.automorphism.images)
        images.push_back(word_to_json(w));
    json inverse = json::array();
    for (const Word& w : g.inverse_images)
        inverse.push_back(word_to_json(w));
    return json{{"images", std::move(images)},
                {"inverse_images", std::move(inverse)},
                {"bg", matrix_to_json(g.bg)}};
}

GaugeElement gauge_from_json(const json& j, const Presentation& group)
{
    GaugeElement g;
    g.automorphism.source = group;
    g.automorphism.target = group;
    for (const json& w : expect_json(j, "images"))
        g.automorphism.images.push_back(word_from_json(w));
    for (const json& w : expect_json(j, "inverse_images"))
        g.inverse_images.push_back(word_from_json(w));
    g.bg = matrix_from_json(expect_json(j, "bg"));
    return g;
}

json fibration_to_json(const FibrationData& d)
{
    json witnesses = json::object();
    for (const auto& [key, word] : d.witnesses)
        witnesses[tuple_to_key({key.first, key.second})] = word_to_json(word);
    json quotient_images = json::array();
    for (const Word& w : d.quotient_images)
        quotient_images.push_back(word_to_json(w));
    return json{{"representation", representation_to_json(d.ambient)},
                {"split", json{{"base", d.split.base_dim}, {"fiber", d.split.fiber_dim}}},
                {"permutation", d.permutation},
                {"fiber_generators", d.fiber_generators},
                {"witnesses", std::move(witnesses)},
                {"quotient", json{{"base", presentation_to_json(d.base_presentation)},
                                  {"images", std::move(quotient_images)}}}};
}

FibrationData fibration_from_json(const json& j)
{
    const json split = expect_json(j, "split");
    FibrationData d{representation_from_json(expect_json(j, "representation")),
                    BlockSplit(expect<Index>(split, "base"), expect<Index>(split, "fiber")),
                    expect<std::vector<int>>(j, "fiber_generators"),
                    {},
                    {},
                    {},
                    {}};
    if (j.contains("permutation"))
        d.permutation = expect<std::vector<int>>(j, "permutation");
    for (const auto& [key, word] : expect_json(j, "witnesses").items())
    {
        std::vector<int> pair = key_to_tuple(key);
        if (pair.size() != 2)
            throw ParseError("witness keys must be \"g-j\"");
        d.witnesses[{pair[0], pair[1]}] = word_from_json(word);
    }
    const json quotient = expect_json(j, "quotient");
    d.base_presentation = presentation_from_json(expect_json(quotient, "base"));
    for (const json& w : expect_json(quotient, "images"))
        d.quotient_images.push_back(word_from_json(w));
    return d;
}

json nerve_to_json(const Nerve& n)
{
    return json{{"vertices", n.vertex_count}, {"simplices", n.simplices}};
}

Nerve nerve_from_json(const json& j)
{
    Nerve n;
    n.vertex_count = expect<int>(j, "vertices");
    n.simplices = expect<std::vector<std::vector<int>>>(j, "simplices");
    return n;
}

json system_to_json(const LocalSystem& s)
{
    json transitions = json::object();
    for (const auto& [edge, t] : s.stored_transitions())
        transitions[tuple_to_key({edge.first, edge.second})] = matrix_to_json(t);
    return json{{"nerve", nerve_to_json(s.nerve())},
                {"dim", s.dim()},
                {"transitions", std::move(transitions)}};
}

LocalSystem system_from_json(const json& j)
{
    Nerve n = nerve_from_json(expect_json(j, "nerve"));
    Index dim = expect<Index>(j, "dim");
    std::map<std::pair<int, int>, MatrixQ> transitions;
    for (const auto& [key, m] : expect_json(j, "transitions").items())
    {
        std::vector<int> edge = key_to_tuple(key);
        if (edge.size() != 2)
            throw ParseError("transition keys must be \"i-j\"");
        transitions[{edge[0], edge[1]}] = matrix_from_json(m);
    }
    try
    {
        return LocalSystem(std::move(n), dim, std::move(transitions));
    }
    catch (const Error& e)
    {
        throw ParseError(e.what());
    }
}

json cochain_to_json(const Cochain& c)
{
    json values = json::object();
    for (const auto& [simplex, v] : c.values)
        values[tuple_to_key(simplex)] = vector_to_json(v);
    return json{{"degree", c.degree}, {"dim", c.dim}, {"values", std::move(values)}};
}

Cochain cochain_from_json(const json& j)
{
    Cochain c;
    c.degree = expect<int>(j, "degree");
    c.dim = expect<Index>(j, "dim");
    for (const auto& [key, v] : expect_json(j, "values").items())
        c.values[key_to_tuple(key)] = vector_from_json(v);
    return c;
}

json gluing_to_json(const GluingFamily& u)
{
    json out = json::object();
    for (const auto& [edge, map] : u)
        out[tuple_to_key({edge.first, edge.second})] = affine_to_json(map);
    return out;
}

GluingFamily gluing_from_json(const json& j)
{
    GluingFamily u;
    for (const auto& [key, map] : j.items())
    {
        std::vector<int> edge = key_to_tuple(key);
        if (edge.size() != 2)
            throw ParseError("gluing keys must be \"i-j\"");
        u.emplace(std::make_pair(edge[0], edge[1]), affine_from_json(map));
    }
    return u;
}

json ladder_to_json(const LadderSpec& spec)
{
    json levels = json::array();
    for (const LevelData& level : spec.levels)
        levels.push_back(json{{"system", system_to_json(level.system)},
                              {"gluing", gluing_to_json(level.gluing)}});
    return json{{"nerve", nerve_to_json(spec.base_nerve)}, {"levels", std::move(levels)}};
}

LadderSpec ladder_from_json(const json& j)
{
    LadderSpec spec;
    spec.base_nerve = nerve_from_json(expect_json(j, "nerve"));
    for (const json& level : expect_json(j, "levels"))
        spec.levels.push_back(LevelData{system_from_json(expect_json(level, "system")),
                                        gluing_from_json(expect_json(level, "gluing"))});
    return spec;
}

json verdict_to_json(const LadderVerdict& v)
{
    json out;
    out["status"] = v.status == LadderStatus::Solvable ? "solvable" : "obstructed";
    if (v.status == LadderStatus::Obstructed)
    {
        out["obstructed_rung"] = v.obstructed_rung;
        out["certificate"] = vector_to_json(v.certificate);
    }
    else
    {
        json corrections = json::array();
        for (const Cochain& c : v.corrections)
            corrections.push_back(cochain_to_json(c));
        out["corrections"] = std::move(corrections);
        out["replay_verified"] = v.replay_verified;
    }
    return out;
}

}  // namespace flataff::io
