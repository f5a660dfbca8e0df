/**
 * The recursive solvability ladder for stacked gluing data: per-level defect
 * cocycles, lifts into the next carrier system, rung-by-rung coboundary
 * solving in Whitney-sum coefficients, and replayable correction chains.
 */

#ifndef FLATAFF_LADDER_HPP
#define FLATAFF_LADDER_HPP

#include <vector>

#include "flataff/cech.hpp"

namespace flataff {

struct LevelData
{
    LocalSystem system;   // declared carrier for this level's defect
    GluingFamily gluing;  // chosen lifts on the edges of the base nerve
};

struct LadderSpec
{
    Nerve base_nerve;
    std::vector<LevelData> levels;  // level 1 first
};

/**
 * The translational defect of a level's gluing, expressed in the level's
 * declared coefficient system. Propagates NotTranslational.
 */
Cochain level_defect(const LevelData& level);

/**
 * The coboundary of a cocycle's representatives taken in the next carrier
 * system. The result is always a cocycle of the carrier. Throws NotACocycle
 * when `prev` is not closed in its own system.
 */
Cochain lift_defect(const LocalSystem& own, const Cochain& prev, const LocalSystem& carrier);

/** Block direct sum over a shared nerve; `first` contributes the leading
 *  coordinates. */
LocalSystem whitney_sum(const LocalSystem& first, const LocalSystem& second);

enum class LadderStatus
{
    Solvable,
    Obstructed
};

struct LadderVerdict
{
    LadderStatus status = LadderStatus::Solvable;
    int obstructed_rung = 0;          // 1-based, when Obstructed
    VectorQ certificate;              // nonzero class coordinates at that rung
    std::vector<Cochain> corrections;  // per successful rung, in its Whitney system
    bool replay_verified = false;     // strict cocycle identity after correction
};

/**
 * Runs the ladder from level 1 upward. Each rung solves its defect (paired,
 * from the second rung on, with the previous correction transported into the
 * current carrier) in the Whitney sum of the rung's system with the previous
 * one. The intermediate-cocycle hypothesis is checked at every rung and
 * surfaces as NotACocycle if it fails for the given data.
 */
LadderVerdict run_ladder(const LadderSpec& spec);

}  // namespace flataff

#endif  // FLATAFF_LADDER_HPP
