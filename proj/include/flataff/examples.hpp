/**
 * Builtin datasets used by the command-line tool and the test suites.
 * Every dataset is constructed in code, so the library validates its own
 * fixtures on first use.
 */

#ifndef FLATAFF_EXAMPLES_HPP
#define FLATAFF_EXAMPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "flataff/fibration.hpp"
#include "flataff/ladder.hpp"

namespace flataff {

struct Example
{
    std::string name;
    std::string description;
    std::optional<AffineRepresentation> representation;
    std::optional<FibrationData> fibration;
    std::optional<LocalSystem> system;
    std::optional<LadderSpec> ladder;
};

/** Names accepted by load_example, sorted. */
std::vector<std::string> example_names();

/** Throws UnknownExample with the list of valid names. */
Example load_example(const std::string& name);

}  // namespace flataff

#endif  // FLATAFF_EXAMPLES_HPP
