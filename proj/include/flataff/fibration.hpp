/**
 * Affine-bundle holonomy data over a base/fiber split: validation of the
 * normal form and conjugation witnesses, the radiance map r, the affine
 * local triviality test, and the induced action on fiber H^1.
 */

#ifndef FLATAFF_FIBRATION_HPP
#define FLATAFF_FIBRATION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flataff/cohomology.hpp"

namespace flataff {

struct FibrationData
{
    AffineRepresentation ambient;  // of pi_1(M), dim m + l, base coordinates first
    BlockSplit split;
    std::vector<int> fiber_generators;  // ambient generator indices

    // witness[(g, j)] expresses g fiber_j g^{-1} as a word in fiber-generator
    // positions, for every ambient generator g and fiber position j.
    std::map<std::pair<int, int>, Word> witnesses;

    Presentation base_presentation;
    std::vector<Word> quotient_images;  // ambient generator -> word in the base

    // Coordinate permutation applied to reach base-first ordering; recorded
    // for serialization only.
    std::vector<int> permutation;
};

/** Relators of the ambient presentation lying entirely in fiber letters,
 *  reindexed to fiber positions. */
Presentation fiber_presentation(const FibrationData& d);

/** The fiber linear holonomy: fiber_linear blocks of the fiber generators. */
CoefficientModule fiber_module(const FibrationData& d);

Word witness_in_ambient(const FibrationData& d, const Word& fiber_word);

struct FibrationReport
{
    bool pass = true;
    std::vector<std::string> violations;
    std::vector<std::string> assumptions;  // quotient checks beyond free reduction
};

FibrationReport validate_fibration(const FibrationData& d);

/** r(x) = constant_part + linear_part x, in H^1 coordinates. */
struct RadianceMap
{
    CohomologySpaces spaces;
    VectorQ constant_part;  // h1_dim
    MatrixQ linear_part;    // h1_dim x m
};

RadianceMap radiance_map(const FibrationData& d);

/** Affinely locally trivial iff the radiance map is constant. */
bool is_alt(const FibrationData& d);

/**
 * The action of an ambient generator on H^1 of the fiber module, computed
 * from its conjugation witnesses and fiber linear part. Fiber generators
 * act trivially.
 */
MatrixQ induced_h1_action(const FibrationData& d, int ambient_gen);

struct PointCheck
{
    VectorQ point;
    bool pass = true;
};

struct EquivarianceReport
{
    bool pass = true;
    std::vector<PointCheck> points;
};

/**
 * Verifies r(A x + a) = i(gamma) r(x) exactly at each sample point, with
 * both sides computed independently.
 */
EquivarianceReport equivariance_check(const FibrationData& d, int ambient_gen,
                                      const std::vector<VectorQ>& sample_points);

}  // namespace flataff

#endif  // FLATAFF_FIBRATION_HPP
