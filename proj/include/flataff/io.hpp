/**
 * JSON interchange for every domain type. Rationals serialize as strings
 * "p/q" so no consumer can lose exactness; parse(print(x)) round-trips
 * bit-exactly.
 */

#ifndef FLATAFF_IO_HPP
#define FLATAFF_IO_HPP

#include <nlohmann/json.hpp>

#include "flataff/cohomology.hpp"
#include "flataff/fibration.hpp"
#include "flataff/ladder.hpp"

namespace flataff::io {

using json = nlohmann::json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json vector_to_json(const VectorQ& v);
VectorQ vector_from_json(const json& j);

json matrix_to_json(const MatrixQ& m);
MatrixQ matrix_from_json(const json& j);

json affine_to_json(const AffineMap& f);
AffineMap affine_from_json(const json& j);

json word_to_json(const Word& w);
Word word_from_json(const json& j);

json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json representation_to_json(const AffineRepresentation& r);
AffineRepresentation representation_from_json(const json& j);

json module_to_json(const CoefficientModule& m);
CoefficientModule module_from_json(const json& j);

json gauge_to_json(const GaugeElement& g);
GaugeElement gauge_from_json(const json& j, const Presentation& group);

json fibration_to_json(const FibrationData& d);
FibrationData fibration_from_json(const json& j);

json nerve_to_json(const Nerve& n);
Nerve nerve_from_json(const json& j);

json system_to_json(const LocalSystem& s);
LocalSystem system_from_json(const json& j);

json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const json& j);

json gluing_to_json(const GluingFamily& u);
GluingFamily gluing_from_json(const json& j);

json ladder_to_json(const LadderSpec& spec);
LadderSpec ladder_from_json(const json& j);

json verdict_to_json(const LadderVerdict& v);

}  // namespace flataff::io

#endif  // FLATAFF_IO_HPP
