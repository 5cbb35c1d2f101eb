#pragma once

#include <json.hpp>
#include <memory>
#include <string>

#include "elg/dataset.hpp"
#include "elg/elgebra.hpp"
#include "elg/exc_algebra.hpp"
#include "elg/lie_algebra.hpp"
#include "elg/subspace.hpp"

namespace elg::io {

using nlohmann::json;

/// Rationals are strings "p/q" (or "p"); plain JSON integers are accepted on input.
json to_json(const Rat& r);
Rat rat_from_json(const json& j);

json to_json(const Vec& v);
Vec vec_from_json(const json& j);

/// Dense matrix as a list of rows.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"dim": n, "deg": k, "terms": [[[i, ...], "p/q"], ...]} with 1-based sorted indices.
json to_json(const Form& f);
json to_json(const Poly& p);
Form form_from_json(const json& j);
Poly poly_from_json(const json& j);

/// {"dim": n, "f": [[i, j, k, "p/q"], ...]} listing [e_i, e_j] ∋ value·e_k for i < j.
json to_json(const LieAlg& k);
LieAlg lie_from_json(const json& j);

/// {"family", "n" | "p","q", "embed_scale", "g_basis"?}. On input the family is rebuilt; a given
/// embed_scale or g_basis overrides the built one without re-verifying it.
json to_json(const DataSet& ds, bool with_g_basis);
std::shared_ptr<const DataSet> dataset_from_json(const json& j);

/// {"ambient": "E" | "Edual", "dataset": ..., "basis": [[...], ...]}.
json to_json(const Subspace& v);
/// Reuses `ds` when given and its fingerprint matches the embedded data set.
Subspace subspace_from_json(const json& j, std::shared_ptr<const DataSet> ds = nullptr);

/// {"dataset": ..., "c": [[α, β, γ, "p/q"], ...], "D": [[i, j, "p/q"], ...]}, optional "lie"/"F1"/"F4".
json to_json(const Elgebra& e);
Elgebra elgebra_from_json(const json& j);

json to_json(const ExcElem& x);
ExcElem exc_elem_from_json(const json& j, int n);
/// {"n": n, "entries": [...]}.
json to_json(const GroupWord& w, int n);
GroupWord word_from_json(const json& j);

json to_json(const VerificationReport& r);
json to_json(const ParallelisationCertificate& c);

/// Parse errors become InputError.
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace elg::io
