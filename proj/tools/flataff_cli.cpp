/**
 * Batch command-line front end. One subcommand per invocation; reads JSON
 * datasets (or builtin examples), writes a JSON report, and exits 0 on a
 * positive outcome, 1 on a mathematical negative, 2 on malformed input.
 */

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "flataff/examples.hpp"
#include "flataff/io.hpp"

namespace {

using flataff::io::json;

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitBadInput = 2;

struct CommonInputs
{
    std::string example;
    std::string input_path;
    std::string inline_json;
    std::string output_path;
};

void add_common(CLI::App* cmd, CommonInputs& in)
{
    cmd->add_option("--example", in.example, "builtin dataset name");
    cmd->add_option("--input", in.input_path, "path to a JSON dataset");
    cmd->add_option("--json", in.inline_json, "inline JSON dataset");
    cmd->add_option("--output", in.output_path, "write the report here instead of stdout");
}

std::optional<json> load_payload(const CommonInputs& in)
{
    if (!in.inline_json.empty())
    {
        try
        {
            return json::parse(in.inline_json);
        }
        catch (const json::exception& e)
        {
            throw flataff::ParseError(std::string("inline JSON: ") + e.what());
        }
    }
    if (!in.input_path.empty())
    {
        std::ifstream f(in.input_path);
        if (!f)
            throw flataff::ParseError("cannot open " + in.input_path);
        try
        {
            return json::parse(f);
        }
        catch (const json::exception& e)
        {
            throw flataff::ParseError(in.input_path + ": " + e.what());
        }
    }
    return std::nullopt;
}

flataff::AffineRepresentation get_representation(const CommonInputs& in)
{
    if (!in.example.empty())
    {
        flataff::Example e = flataff::load_example(in.example);
        if (e.representation)
            return *e.representation;
        if (e.fibration)
            return e.fibration->ambient;
        throw flataff::ParseError("example " + in.example + " has no representation payload");
    }
    if (auto payload = load_payload(in))
        return flataff::io::representation_from_json(*payload);
    throw flataff::ParseError("a representation is required (--example, --input or --json)");
}

flataff::CoefficientModule get_module(const CommonInputs& in)
{
    if (!in.example.empty())
        return flataff::linear_module(get_representation(in));
    if (auto payload = load_payload(in))
    {
        if (payload->contains("action"))
            return flataff::io::module_from_json(*payload);
        return flataff::linear_module(flataff::io::representation_from_json(*payload));
    }
    throw flataff::ParseError("a module is required (--example, --input or --json)");
}

flataff::FibrationData get_fibration(const CommonInputs& in)
{
    if (!in.example.empty())
    {
        flataff::Example e = flataff::load_example(in.example);
        if (!e.fibration)
            throw flataff::ParseError("example " + in.example + " has no fibration payload");
        return *e.fibration;
    }
    if (auto payload = load_payload(in))
        return flataff::io::fibration_from_json(*payload);
    throw flataff::ParseError("fibration data is required (--example, --input or --json)");
}

flataff::LocalSystem get_system(const CommonInputs& in)
{
    if (!in.example.empty())
    {
        flataff::Example e = flataff::load_example(in.example);
        if (!e.system)
            throw flataff::ParseError("example " + in.example + " has no local system payload");
        return *e.system;
    }
    if (auto payload = load_payload(in))
        return flataff::io::system_from_json(*payload);
    throw flataff::ParseError("a local system is required (--example, --input or --json)");
}

flataff::LadderSpec get_ladder(const CommonInputs& in)
{
    if (!in.example.empty())
    {
        flataff::Example e = flataff::load_example(in.example);
        if (!e.ladder)
            throw flataff::ParseError("example " + in.example + " has no ladder payload");
        return *e.ladder;
    }
    if (auto payload = load_payload(in))
        return flataff::io::ladder_from_json(*payload);
    throw flataff::ParseError("a ladder spec is required (--example, --input or --json)");
}

int emit(const CommonInputs& in, const json& report, int status)
{
    if (!in.output_path.empty())
    {
        std::ofstream f(in.output_path);
        if (!f)
        {
            std::cerr << "cannot write " << in.output_path << "\n";
            return kExitBadInput;
        }
        f << report.dump(2) << "\n";
    }
    else
    {
        std::cout << report.dump(2) << "\n";
    }
    return status;
}

int run_verify_rep(const CommonInputs& in)
{
    flataff::RepresentationReport r = flataff::verify_representation(get_representation(in));
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"relator", f.relator_index},
                                {"evaluated", flataff::io::affine_to_json(f.evaluated)}});
    json report{{"pass", r.pass}, {"failures", std::move(failures)}};
    return emit(in, report, r.pass ? kExitPass : kExitNegative);
}

int run_h0(const CommonInputs& in)
{
    flataff::MatrixQ basis = flataff::h0(get_module(in));
    json report{{"dim", basis.cols()}, {"basis", flataff::io::matrix_to_json(basis)}};
    return emit(in, report, kExitPass);
}

int run_h1(const CommonInputs& in)
{
    flataff::CohomologySpaces s = flataff::h1(get_module(in));
    json report{{"dim", s.h1_dim},
                {"z1_dim", s.z1_basis.cols()},
                {"b1_dim", s.b1_basis.cols()}};
    return emit(in, report, kExitPass);
}

int run_radiance(const CommonInputs& in)
{
    flataff::RadianceClass cls = flataff::radiance_class(get_representation(in));
    json report{{"h1_dim", cls.spaces.h1_dim},
                {"coordinates", flataff::io::vector_to_json(cls.coordinates)},
                {"radiant", flataff::is_zero(cls.coordinates)}};
    return emit(in, report, kExitPass);
}

int run_gauge_check(const CommonInputs& in)
{
    auto payload = load_payload(in);
    if (!payload)
        throw flataff::ParseError("gauge-check needs --input or --json");
    flataff::CoefficientModule m = flataff::io::module_from_json(payload->at("module"));
    flataff::CohomologySpaces spaces = flataff::h1(m);
    flataff::RadianceClass cls1{spaces, flataff::io::vector_from_json(payload->at("class1"))};
    flataff::RadianceClass cls2{spaces, flataff::io::vector_from_json(payload->at("class2"))};
    std::vector<flataff::GaugeElement> candidates;
    for (const json& g : payload->at("candidates"))
        candidates.push_back(flataff::io::gauge_from_json(g, m.presentation));
    flataff::GaugeVerdict v = flataff::gauge_equivalent(m, cls1, cls2, candidates);
    json report{{"equivalent", v.equivalent}, {"candidate_index", v.candidate_index}};
    return emit(in, report, v.equivalent ? kExitPass : kExitNegative);
}

int run_complete_det(const CommonInputs& in)
{
    flataff::CompletenessVerdict v = flataff::completeness_det_test(get_representation(in));
    json report{{"det", flataff::io::rational_to_json(v.det)}, {"nonzero", v.nonzero}};
    return emit(in, report, v.nonzero ? kExitPass : kExitNegative);
}

int run_fibration_check(const CommonInputs& in)
{
    flataff::FibrationReport r = flataff::validate_fibration(get_fibration(in));
    json report{{"pass", r.pass}, {"violations", r.violations}, {"assumptions", r.assumptions}};
    return emit(in, report, r.pass ? kExitPass : kExitNegative);
}

int run_alt_check(const CommonInputs& in)
{
    flataff::FibrationData d = get_fibration(in);
    flataff::RadianceMap r = flataff::radiance_map(d);
    const bool alt = flataff::is_zero(r.linear_part);
    json report{{"alt", alt},
                {"constant_part", flataff::io::vector_to_json(r.constant_part)},
                {"linear_part", flataff::io::matrix_to_json(r.linear_part)}};
    return emit(in, report, alt ? kExitPass : kExitNegative);
}

int run_induced_action(const CommonInputs& in, int generator)
{
    flataff::MatrixQ m = flataff::induced_h1_action(get_fibration(in), generator);
    json report{{"generator", generator}, {"matrix", flataff::io::matrix_to_json(m)}};
    return emit(in, report, kExitPass);
}

int run_equivariance(const CommonInputs& in, int generator, const std::string& points_json)
{
    flataff::FibrationData d = get_fibration(in);
    std::vector<flataff::VectorQ> points;
    if (!points_json.empty())
    {
        json parsed;
        try
        {
            parsed = json::parse(points_json);
        }
        catch (const json::exception& e)
        {
            throw flataff::ParseError(std::string("--points: ") + e.what());
        }
        for (const json& p : parsed)
            points.push_back(flataff::io::vector_from_json(p));
    }
    else
    {
        const flataff::Index m = d.split.base_dim;
        for (int s = 0; s < 3; ++s)
        {
            flataff::VectorQ p(m);
            for (flataff::Index i = 0; i < m; ++i)
                p(i) = flataff::Rational(s * (i + 2), 3);
            points.push_back(std::move(p));
        }
    }
    flataff::EquivarianceReport r = flataff::equivariance_check(d, generator, points);
    json checked = json::array();
    for (const auto& pc : r.points)
        checked.push_back(
            json{{"point", flataff::io::vector_to_json(pc.point)}, {"pass", pc.pass}});
    json report{{"generator", generator}, {"pass", r.pass}, {"points", std::move(checked)}};
    return emit(in, report, r.pass ? kExitPass : kExitNegative);
}

int run_cech_validate(const CommonInputs& in)
{
    flataff::SystemReport r = flataff::validate_system(get_system(in));
    json report{{"pass", r.pass},
                {"violations", r.violations},
                {"offending_simplices", r.offending_simplices}};
    return emit(in, report, r.pass ? kExitPass : kExitNegative);
}

int run_cech_cohomology(const CommonInputs& in, int k)
{
    flataff::CechCohomology c = flataff::cohomology(get_system(in), k);
    json report{{"k", k},
                {"dim", c.dim},
                {"cocycle_dim", c.cocycle_basis.cols()},
                {"coboundary_dim", c.coboundary_basis.cols()}};
    return emit(in, report, kExitPass);
}

int run_solve_coboundary(const CommonInputs& in)
{
    auto payload = load_payload(in);
    if (!payload)
        throw flataff::ParseError("solve-coboundary needs --input or --json");
    flataff::LocalSystem s = flataff::io::system_from_json(payload->at("system"));
    flataff::Cochain z = flataff::io::cochain_from_json(payload->at("cochain"));
    flataff::CoboundarySolution sol = flataff::solve_coboundary(s, z);
    json report;
    report["solved"] = sol.solved;
    if (sol.solved)
        report["primitive"] = flataff::io::cochain_to_json(sol.primitive);
    else
        report["certificate"] = flataff::io::vector_to_json(sol.certificate);
    return emit(in, report, sol.solved ? kExitPass : kExitNegative);
}

int run_defect(const CommonInputs& in)
{
    flataff::Nerve nerve;
    flataff::GluingFamily gluing;
    flataff::Index dim = 0;
    if (!in.example.empty())
    {
        flataff::Example e = flataff::load_example(in.example);
        if (!e.ladder || e.ladder->levels.empty())
            throw flataff::ParseError("example " + in.example + " has no gluing payload");
        nerve = e.ladder->base_nerve;
        gluing = e.ladder->levels.front().gluing;
        dim = e.ladder->levels.front().system.dim();
    }
    else if (auto payload = load_payload(in))
    {
        nerve = flataff::io::nerve_from_json(payload->at("nerve"));
        gluing = flataff::io::gluing_from_json(payload->at("gluing"));
        dim = payload->at("dim").get<flataff::Index>();
    }
    else
    {
        throw flataff::ParseError("defect needs --example, --input or --json");
    }
    flataff::DefectResult r = flataff::nonabelian_defect(nerve, gluing, dim);
    json report{{"defect", flataff::io::cochain_to_json(r.defect)},
                {"induced_system", flataff::io::system_to_json(r.induced)}};
    return emit(in, report, kExitPass);
}

int run_ladder(const CommonInputs& in)
{
    flataff::LadderVerdict v = flataff::run_ladder(get_ladder(in));
    return emit(in, flataff::io::verdict_to_json(v),
                v.status == flataff::LadderStatus::Solvable ? kExitPass : kExitNegative);
}

int run_example(const CommonInputs& in, const std::string& positional)
{
    std::string name = !positional.empty() ? positional : in.example;
    if (name.empty())
    {
        json report{{"examples", flataff::example_names()}};
        return emit(in, report, kExitPass);
    }
    flataff::Example e = flataff::load_example(name);
    json report{{"name", e.name}, {"description", e.description}};
    if (e.representation)
        report["representation"] = flataff::io::representation_to_json(*e.representation);
    if (e.fibration)
        report["fibration"] = flataff::io::fibration_to_json(*e.fibration);
    if (e.system)
        report["system"] = flataff::io::system_to_json(*e.system);
    if (e.ladder)
        report["ladder"] = flataff::io::ladder_to_json(*e.ladder);
    return emit(in, report, kExitPass);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact rational toolkit for flat affine holonomy and gluing obstructions"};
    app.require_subcommand(1);

    CommonInputs in;
    int generator = 0;
    int degree = 0;
    std::string points_json;
    std::string example_positional;

    CLI::App* verify_rep = app.add_subcommand("verify-rep", "check all relators of a representation");
    CLI::App* h0 = app.add_subcommand("h0", "invariants of a coefficient module");
    CLI::App* h1 = app.add_subcommand("h1", "first cohomology of a coefficient module");
    CLI::App* radiance = app.add_subcommand("radiance", "radiance class of a representation");
    CLI::App* gauge_check = app.add_subcommand("gauge-check", "test gauge equivalence of two classes");
    CLI::App* complete_det = app.add_subcommand("complete-det", "translation determinant test");
    CLI::App* fibration_check = app.add_subcommand("fibration-check", "validate fibration data");
    CLI::App* alt_check = app.add_subcommand("alt-check", "affine local triviality test");
    CLI::App* induced_action = app.add_subcommand("induced-action", "induced action on fiber H^1");
    CLI::App* equivariance = app.add_subcommand("equivariance", "radiance-map equivariance check");
    CLI::App* cech_validate = app.add_subcommand("cech-validate", "validate a nerve-borne local system");
    CLI::App* cech_cohomology = app.add_subcommand("cech-cohomology", "cohomology of a local system");
    CLI::App* solve_coboundary = app.add_subcommand("solve-coboundary", "solve delta a = z or certify");
    CLI::App* defect = app.add_subcommand("defect", "translational defect of a gluing family");
    CLI::App* ladder = app.add_subcommand("ladder", "run the rung-by-rung solvability ladder");
    CLI::App* example = app.add_subcommand("example", "print a builtin dataset");

    for (CLI::App* cmd : {verify_rep, h0, h1, radiance, gauge_check, complete_det,
                          fibration_check, alt_check, induced_action, equivariance,
                          cech_validate, cech_cohomology, solve_coboundary, defect, ladder,
                          example})
        add_common(cmd, in);

    induced_action->add_option("--generator", generator, "ambient generator index")->required();
    equivariance->add_option("--generator", generator, "ambient generator index")->required();
    equivariance->add_option("--points", points_json, "JSON array of base points");
    cech_cohomology->add_option("--k", degree, "cohomology degree")->required();
    cech_cohomology->add_option("--nerve", in.input_path, "path to a system JSON (alias)");
    cech_validate->add_option("--nerve", in.input_path, "path to a system JSON (alias)");
    example->add_option("name", example_positional, "dataset name");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitBadInput;
    }

    try
    {
        if (*verify_rep)
            return run_verify_rep(in);
        if (*h0)
            return run_h0(in);
        if (*h1)
            return run_h1(in);
        if (*radiance)
            return run_radiance(in);
        if (*gauge_check)
            return run_gauge_check(in);
        if (*complete_det)
            return run_complete_det(in);
        if (*fibration_check)
            return run_fibration_check(in);
        if (*alt_check)
            return run_alt_check(in);
        if (*induced_action)
            return run_induced_action(in, generator);
        if (*equivariance)
            return run_equivariance(in, generator, points_json);
        if (*cech_validate)
            return run_cech_validate(in);
        if (*cech_cohomology)
            return run_cech_cohomology(in, degree);
        if (*solve_coboundary)
            return run_solve_coboundary(in);
        if (*defect)
            return run_defect(in);
        if (*ladder)
            return run_ladder(in);
        if (*example)
            return run_example(in, example_positional);
    }
    catch (const flataff::UnknownExample& e)
    {
        json report{{"error", e.what()}, {"known", e.known}};
        std::cout << report.dump(2) << "\n";
        return kExitNegative;
    }
    catch (const flataff::Error& e)
    {
        json report{{"error", e.what()}};
        std::cout << report.dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    }
    catch (const json::exception& e)
    {
        json report{{"error", e.what()}};
        std::cout << report.dump(2) << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
