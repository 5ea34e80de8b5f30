#pragma once

// JSON encodings of fields, scalars, matrices, subspaces, algebras and
// verdicts. Basis indices are 1-based on the wire.

#include <json.hpp>

#include "prelie/rota_baxter.hpp"

namespace prelie {

using json = nlohmann::ordered_json;

json field_to_json(Field f);
/// Accepts the descriptor object or a short name string such as "gf5".
Field field_from_json(const json& j);

json scalar_to_json(const Scalar& s);
/// Accepts a literal string or, for convenience, a JSON integer.
Scalar scalar_from_json(Field f, const json& j);

json vector_to_json(const Vector& v);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(Field f, const json& j);

json subspace_to_json(const Subspace& w);
Subspace subspace_from_json(Field f, const json& j);

json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

json report_to_json(const Report& r);

/// {operator, weight, is_rb, witness, splitting, case, certificate, theorem2}.
/// The case/certificate/theorem2 fields are filled only for RB operators on I_n.
json rb_summary(const Algebra& a, const RBOperator& r);
/// True when the summary records a failed case certificate or theorem2 verdict.
bool rb_summary_falsifies(const json& summary);

json decomposition_to_json(const Decomposition& d);

} // namespace prelie
