#include "flataff/ladder.hpp"

#include "flataff/errors.hpp"

namespace flataff {

namespace {

bool same_nerve(const Nerve& a, const Nerve& b)
{
    return a.vertex_count == b.vertex_count
           && a.simplices_of_dim(0) == b.simplices_of_dim(0)
           && a.simplices_of_dim(1) == b.simplices_of_dim(1)
           && a.simplices_of_dim(2) == b.simplices_of_dim(2)
           && a.simplices_of_dim(3) == b.simplices_of_dim(3);
}

/** Corrected gluing: each edge map composed with the translation by minus
 *  the correction value, taken in the leading-vertex frame. */
GluingFamily apply_correction(const GluingFamily& u, const Cochain& correction, Index dim)
{
    GluingFamily corrected;
    for (const auto& [edge, map] : u)
    {
        auto it = correction.values.find({edge.first, edge.second});
        if (it == correction.values.end())
            throw Error("correction missing a value on an edge");
        VectorQ head = it->second.head(dim);
        corrected.emplace(edge, compose(AffineMap::translation_by(-head), map));
    }
    return corrected;
}

bool strict_cocycle(const Nerve& n, const GluingFamily& u)
{
    for (const auto& t : n.simplices_of_dim(2))
    {
        AffineMap lhs = compose(gluing_at(u, t[0], t[1]), gluing_at(u, t[1], t[2]));
        if (!(lhs == gluing_at(u, t[0], t[2])))
            return false;
    }
    return true;
}

}  // namespace

Cochain level_defect(const LevelData& level)
{
    DefectResult d = nonabelian_defect(level.system.nerve(), level.gluing,
                                       level.system.dim());
    Cochain out = d.defect;
    out.dim = level.system.dim();
    return out;
}

Cochain lift_defect(const LocalSystem& own, const Cochain& prev, const LocalSystem& carrier)
{
    if (prev.dim != own.dim())
        throw DimensionMismatch("lift_defect: cochain does not match its own system");
    if (carrier.dim() != prev.dim)
        throw DimensionMismatch("lift_defect: carrier dimension incompatible");
    if (!coboundary(own, prev).is_zero_cochain())
        throw NotACocycle("lift_defect: input is not closed in its own system");
    return coboundary(carrier, prev);
}

LocalSystem whitney_sum(const LocalSystem& first, const LocalSystem& second)
{
    if (!same_nerve(first.nerve(), second.nerve()))
        throw DimensionMismatch("whitney_sum: systems live over different nerves");
    const Index d1 = first.dim();
    const Index d2 = second.dim();
    std::map<std::pair<int, int>, MatrixQ> transitions;
    for (const auto& e : first.nerve().simplices_of_dim(1))
    {
        MatrixQ t = MatrixQ::Zero(d1 + d2, d1 + d2);
        t.topLeftCorner(d1, d1) = first.transition(e[0], e[1]);
        t.bottomRightCorner(d2, d2) = second.transition(e[0], e[1]);
        transitions[{e[0], e[1]}] = std::move(t);
    }
    return LocalSystem(first.nerve(), d1 + d2, std::move(transitions));
}

LadderVerdict run_ladder(const LadderSpec& spec)
{
    if (spec.levels.empty())
        throw Error("run_ladder: at least one level required");
    for (const LevelData& level : spec.levels)
    {
        if (!same_nerve(level.system.nerve(), spec.base_nerve))
            throw Error("run_ladder: level system is not over the base nerve");
        SystemReport sr = validate_system(level.system);
        if (!sr.pass)
            throw Error("run_ladder: level system does not validate: " + sr.violations.front());
    }

    LadderVerdict verdict;
    Cochain carried;  // previous rung's correction, restricted to its own level
    bool have_carried = false;

    for (std::size_t r = 0; r < spec.levels.size(); ++r)
    {
        const LevelData& level = spec.levels[r];
        Cochain defect = level_defect(level);

        LocalSystem rung_system = level.system;
        Cochain z = defect;
        if (have_carried)
        {
            const LocalSystem& prev_system = spec.levels[r - 1].system;
            if (prev_system.dim() != level.system.dim())
                throw DimensionMismatch("run_ladder: adjacent carrier dimensions differ");
            Cochain lifted = coboundary(level.system, carried);
            rung_system = whitney_sum(level.system, prev_system);
            // stack the defect over the lifted correction, later level first
            z = zero_cochain(rung_system, 2);
            for (auto& [simplex, value] : z.values)
            {
                value.head(level.system.dim()) = defect.values.at(simplex);
                value.tail(prev_system.dim()) = lifted.values.at(simplex);
            }
        }

        // the intermediate chain must be a cocycle of the rung's carrier;
        // this is a hypothesis of the construction, so surface any failure
        if (!coboundary(rung_system, z).is_zero_cochain())
            throw NotACocycle("run_ladder: rung " + std::to_string(r + 1)
                              + " chain is not a cocycle in its carrier");

        CoboundarySolution sol = solve_coboundary(rung_system, z);
        if (!sol.solved)
        {
            verdict.status = LadderStatus::Obstructed;
            verdict.obstructed_rung = static_cast<int>(r + 1);
            verdict.certificate = sol.certificate;
            return verdict;
        }
        verdict.corrections.push_back(sol.primitive);

        carried = Cochain{1, level.system.dim(), {}};
        for (const auto& [simplex, value] : sol.primitive.values)
            carried.values[simplex] = value.head(level.system.dim());
        have_carried = true;
    }

    verdict.status = LadderStatus::Solvable;
    verdict.replay_verified = true;
    for (std::size_t r = 0; r < spec.levels.size(); ++r)
    {
        GluingFamily corrected = apply_correction(
            spec.levels[r].gluing, verdict.corrections[r], spec.levels[r].system.dim());
        if (!strict_cocycle(spec.base_nerve, corrected))
            verdict.replay_verified = false;
    }
    return verdict;
}

}  // namespace flataff
