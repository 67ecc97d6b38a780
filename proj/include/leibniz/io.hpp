#pragma once

#include <string>

#include "json.hpp"
#include "leibniz/census.hpp"

namespace leibniz::io {

using Json = nlohmann::ordered_json;

// GF(p): integer 0..p-1. Q: "a/b" (or "a"). GF(p)(t): {"num": [...], "den": [...]}
// ascending. On input, GF(p) also accepts any integer and every field
// accepts an expression string such as "t^2+1".
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Field& field, const Json& j);

Json to_json(const Field& field);
Field field_from_json(const Json& j);

Json to_json(const Vector& v);
Vector vector_from_json(const Field& field, std::size_t dim, const Json& j);

/// Echelon basis as a list of vectors.
Json to_json(const Subspace& s);
/// A list of generator vectors; canonicalized.
Subspace subspace_from_json(const Field& field, std::size_t dim, const Json& j);

/// {"field", "dim", "basis_names", "table"}
Json to_json(const MultiplicationTable& t);
MultiplicationTable table_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Field& field, const Json& j);

Json to_json(const Invariants& inv);
Json to_json(const LeibnizAlgebra& L, const QuasiIdealVerdict& v);
Json to_json(const LeibnizAlgebra& L, const ClassificationResult& r);
Json to_json(const LemmaReport& r);
Json to_json(const HarnessReport& r);
Json to_json(const CensusReport& r);

Json read_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace leibniz::io
