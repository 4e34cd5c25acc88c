#pragma once

#include <json.hpp>

#include "modlie/matrix.hpp"
#include "modlie/subspace.hpp"

// JSON schemas:
//   matrix:   {"field": "gf2"|"gfp:<p>"|"Q", "rows": r, "cols": c,
//              "entries": [[...], ...]}   rational entries are strings "a/b"
//   subspace: {"field", "ambient_dim", "basis": [[...], ...]}
namespace modlie {

nlohmann::json scalar_to_json(const FieldSpec& f, const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const nlohmann::json& j);

}  // namespace modlie
