#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "peircelab/approximation.hpp"
#include "peircelab/subspace.hpp"
#include "peircelab/triple_model.hpp"
#include "peircelab/witnesses.hpp"

namespace peircelab {

using Json = nlohmann::ordered_json;

// {"rows": m, "cols": n, "data": [[re, im], ...]} row-major. Reading also
// accepts a nested row list such as [[0, 2], [0, 0]].
Json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const Json& j);

// {"kind": "rect"|"cstar"|"jbstar", "m": int, "n": int}
Json model_to_json(const TripleModel& model);
TripleModel model_from_json(const Json& j);

// List of matrices; orthonormality is re-verified on load.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, Shape shape);

Json witness_to_json(const WitnessReport& r);
Json combo_to_json(const ProjectionCombo& c);

// Parses text, throwing InvalidInput with the parser message.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace peircelab
