#include "leibniz/io.hpp"

#include <fstream>
#include <sstream>

namespace leibniz::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::Parse, what); }

Json poly_json(const poly::Poly& p) {
  Json a = Json::array();
  for (auto c : p) a.push_back(c);
  return a;
}

poly::Poly poly_from(const Json& j, std::uint32_t p) {
  if (!j.is_array()) bad("polynomial must be a coefficient array");
  poly::Poly out;
  for (const auto& c : j) {
    if (!c.is_number_integer()) bad("polynomial coefficients must be integers");
    long long v = c.get<long long>() % static_cast<long long>(p);
    out.push_back(static_cast<std::uint32_t>(v < 0 ? v + p : v));
  }
  poly::trim(out);
  return out;
}

}  // namespace

Json to_json(const Scalar& s) {
  switch (s.field().kind()) {
    case Field::Kind::prime:
      return s.residue();
    case Field::Kind::rationals:
      return s.to_string();
    case Field::Kind::rational_function:
      return Json{{"num", poly_json(s.function().num)}, {"den", poly_json(s.function().den)}};
  }
  return nullptr;
}

Scalar scalar_from_json(const Field& field, const Json& j) {
  if (j.is_string()) return parse_scalar(field, j.get<std::string>());
  if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  if (j.is_object() && field.kind() == Field::Kind::rational_function) {
    if (!j.contains("num") || !j.contains("den")) bad("rational function needs num and den");
    poly::Poly den = poly_from(j.at("den"), field.p());
    if (den.empty()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    return Scalar::rational_function(field, poly_from(j.at("num"), field.p()), den);
  }
  bad("cannot read a scalar of " + field.name() + " from " + j.dump());
}

Json to_json(const Field& field) {
  switch (field.kind()) {
    case Field::Kind::prime:
      return Json{{"kind", "prime"}, {"p", field.p()}};
    case Field::Kind::rationals:
      return Json{{"kind", "rationals"}};
    case Field::Kind::rational_function:
      return Json{{"kind", "rational_function"}, {"p", field.p()}, {"variable", std::string(field.variable())}};
  }
  return nullptr;
}

Field field_from_json(const Json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) bad("field must be an object with a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rationals") return Field::rationals();
  if (!j.contains("p") || !j.at("p").is_number_unsigned()) bad("field needs a prime p");
  const auto p = j.at("p").get<std::uint32_t>();
  if (kind == "prime") return Field::prime(p);
  if (kind == "rational_function") return Field::rational_function(p, j.value("variable", std::string("t")));
  bad("unknown field kind '" + kind + "'");
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& s : v.entries()) a.push_back(to_json(s));
  return a;
}

Vector vector_from_json(const Field& field, std::size_t dim, const Json& j) {
  if (!j.is_array() || j.size() != dim) bad("vector must be an array of " + std::to_string(dim) + " scalars");
  std::vector<Scalar> entries;
  for (const auto& s : j) entries.push_back(scalar_from_json(field, s));
  return Vector(field, std::move(entries));
}

Json to_json(const Subspace& s) {
  Json a = Json::array();
  for (const auto& v : s.basis()) a.push_back(to_json(v));
  return a;
}

Subspace subspace_from_json(const Field& field, std::size_t dim, const Json& j) {
  if (!j.is_array()) bad("subspace must be a list of generator vectors");
  std::vector<Vector> gens;
  for (const auto& v : j) gens.push_back(vector_from_json(field, dim, v));
  return echelonize(field, dim, gens);
}

Json to_json(const MultiplicationTable& t) {
  const std::size_t n = t.dim();
  Json table = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < n; ++k) cell.push_back(to_json(t(i, j, k)));
      row.push_back(std::move(cell));
    }
    table.push_back(std::move(row));
  }
  return Json{{"field", to_json(t.field())}, {"dim", n}, {"basis_names", t.basis_names()}, {"table", std::move(table)}};
}

MultiplicationTable table_from_json(const Json& j) {
  if (!j.is_object()) bad("algebra file must be a JSON object");
  for (const char* key : {"field", "dim", "table"})
    if (!j.contains(key)) bad(std::string("algebra file lacks '") + key + "'");
  Field field = field_from_json(j.at("field"));
  if (!j.at("dim").is_number_unsigned()) bad("dim must be a non-negative integer");
  const auto n = j.at("dim").get<std::size_t>();
  if (n > kMaxAmbientDim * 4) throw Error(ErrorCode::BadDimension, "dimension too large");
  std::vector<std::string> names;
  if (j.contains("basis_names")) names = j.at("basis_names").get<std::vector<std::string>>();
  if (!names.empty() && names.size() != n) bad("basis_names length differs from dim");
  MultiplicationTable t(field, n, names);
  const Json& table = j.at("table");
  if (!table.is_array() || table.size() != n) bad("table must be n x n x n");
  for (std::size_t a = 0; a < n; ++a) {
    if (!table[a].is_array() || table[a].size() != n) bad("table must be n x n x n");
    for (std::size_t b = 0; b < n; ++b) {
      const Json& cell = table[a][b];
      if (!cell.is_array() || cell.size() != n) bad("table must be n x n x n");
      for (std::size_t k = 0; k < n; ++k) t(a, b, k) = scalar_from_json(field, cell[k]);
    }
  }
  return t;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

Matrix matrix_from_json(const Field& field, const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty list of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(field, j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    Vector row = vector_from_json(field, cols, j[r]);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Json to_json(const Invariants& inv) {
  return Json{{"dim", inv.dim},
              {"is_lie", inv.is_lie},
              {"is_symmetric", inv.is_symmetric},
              {"is_nilpotent", inv.is_nilpotent},
              {"is_solvable", inv.is_solvable},
              {"dim_I", inv.dim_I},
              {"dim_center", inv.dim_center},
              {"dim_square", inv.dim_square},
              {"lower_central_dims", inv.lower_central},
              {"derived_dims", inv.derived}};
}

Json to_json(const LeibnizAlgebra& L, const QuasiIdealVerdict& v) {
  Json out{{"holds", v.holds}};
  if (v.holds) {
    Json cert = Json::array();
    for (const auto& c : v.certificate)
      cert.push_back(Json{{"generator", to_json(c.generator)}, {"generator_text", L.format(c.generator)},
                          {"alpha", to_json(c.alpha)}, {"beta", to_json(c.beta)}});
    out["certificate"] = std::move(cert);
  } else {
    out["reason"] = v.reason;
    if (v.witness) {
      const auto& w = *v.witness;
      out["witness"] = Json{{"h", to_json(w.h)},
                            {"x", to_json(w.x)},
                            {"value", to_json(w.value)},
                            {"side", w.right_side ? "[x,h]" : "[h,x]"},
                            {"text", "h=" + L.format(w.h) + ", x=" + L.format(w.x) + ", value=" + L.format(w.value)}};
    }
  }
  return out;
}

Json to_json(const LeibnizAlgebra& L, const ClassificationResult& r) {
  Json facts = Json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  Json out{{"verdict", std::string(case_name(r.verdict))}, {"label", r.label()}, {"params", r.params}, {"facts", std::move(facts)}};
  if (!r.basis.empty()) {
    Json basis = Json::array();
    for (const auto& v : r.basis) basis.push_back(L.format(v));
    out["adapted_basis"] = std::move(basis);
  }
  if (!r.lambdas.empty()) {
    Json l = Json::array();
    for (const auto& s : r.lambdas) l.push_back(s.to_string());
    out["lambdas"] = std::move(l);
  }
  return out;
}

Json to_json(const LemmaReport& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses)
    clauses.push_back(Json{{"clause", c.clause}, {"applicable", c.applicable}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"failures", r.failures()}, {"clauses", std::move(clauses)}};
}

Json to_json(const HarnessReport& r) {
  Json clauses = Json::object();
  for (const auto& [name, t] : r.clauses)
    clauses[name] = Json{{"applicable", t.applicable}, {"passed", t.passed}, {"failed", t.failed}};
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"algebra", f.algebra}, {"subject", f.subject}, {"clause", f.clause}, {"detail", f.detail}});
  return Json{{"algebras", r.algebras}, {"clauses", std::move(clauses)}, {"failures", std::move(failures)}};
}

Json to_json(const CensusReport& r) {
  Json params{{"field", to_json(r.field)}, {"dim", r.dim}, {"mode", r.exhaustive ? "exhaustive" : "sample"}};
  if (!r.exhaustive) {
    params["samples"] = r.samples;
    params["seed"] = r.seed;
    params["generator"] = "mt19937_64";
  }
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    LeibnizAlgebra L(c.representative.to_table());
    Json cls{{"representative_table", to_json(L.table())["table"]},
             {"representative_index", c.representative.index()},
             {"orbit_size", c.orbit_size},
             {"invariants", to_json(c.invariants)},
             {"in_Q", c.in_Q},
             {"classification", to_json(L, c.classification)},
             {"subalgebra_count", c.subalgebra_count},
             {"quasi_ideal_count", c.quasi_ideal_count},
             {"oracle_mismatches", c.oracle_mismatches}};
    classes.push_back(std::move(cls));
  }
  Json discrepancies = Json::array();
  for (auto i : r.discrepancies) {
    const auto& c = r.classes[i];
    Json facts = Json::object();
    for (const auto& [k, v] : c.classification.facts) facts[k] = v;
    discrepancies.push_back(Json{{"class", i}, {"representative_index", c.representative.index()}, {"dim_I", c.invariants.dim_I},
                                 {"facts", std::move(facts)}});
  }
  Json dist = Json::object();
  for (const auto& [d, n] : r.q_dim_I_distribution) dist[std::to_string(d)] = n;
  Json lemmas = to_json(r.lemmas);
  return Json{{"params", std::move(params)},
              {"totals",
               {{"scanned", r.scanned},
                {"leibniz_valid", r.valid},
                {"iso_classes", r.classes.size()},
                {"non_lie_classes", r.non_lie_classes()},
                {"q_members", std::count_if(r.classes.begin(), r.classes.end(), [](const CensusClass& c) { return c.in_Q; })},
                {"oracle_mismatches", r.oracle_mismatches}}},
              {"q_dim_I_distribution", std::move(dist)},
              {"classes", std::move(classes)},
              {"discrepancies", std::move(discrepancies)},
              {"lemma_clauses", lemmas["clauses"]},
              {"lemma_failures", lemmas["failures"]}};
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) bad("cannot write " + path);
  out << text;
}

}  // namespace leibniz::io
