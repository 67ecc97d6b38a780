// Command-line front end. Exit codes: 0 success or property holds, 1 property
// fails, 2 usage, format or budget error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leibniz/io.hpp"

using namespace leibniz;
using io::Json;

namespace {

struct Globals {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string out;
  bool budget_given = false;
};

void emit(const Globals& g, const Json& j) {
  std::string text = j.dump(2) + "\n";
  if (g.out.empty())
    std::cout << text;
  else
    io::write_text(g.out, text);
}

LeibnizAlgebra load_algebra(const std::string& path) { return LeibnizAlgebra(io::table_from_json(io::read_file(path))); }

Subspace load_subspace(const LeibnizAlgebra& L, const std::string& path) {
  return io::subspace_from_json(L.field(), L.dim(), io::read_file(path));
}

Identity parse_mode(const std::string& m) {
  if (m == "right") return Identity::right;
  if (m == "left") return Identity::left;
  if (m == "lie") return Identity::lie;
  throw Error(ErrorCode::Parse, "mode must be right, left or lie");
}

SeriesKind parse_kind(const std::string& k) {
  if (k == "lower_central") return SeriesKind::lower_central;
  if (k == "derived") return SeriesKind::derived;
  if (k == "omega_of_square") return SeriesKind::omega_of_square;
  throw Error(ErrorCode::Parse, "series kind must be lower_central, derived or omega_of_square");
}

Json series_json(const LeibnizAlgebra& L, const Subspace& H, SeriesKind kind) {
  Json terms = Json::array(), dims = Json::array();
  for (const auto& s : series(L, H, kind)) {
    terms.push_back(io::to_json(s));
    dims.push_back(s.dim());
  }
  return Json{{"dims", std::move(dims)}, {"terms", std::move(terms)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Leibniz algebras and their quasi-ideals"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget", g.budget, "Cap on exhaustive enumerations (census: on scanned tables)");
  app.add_option("--seed", g.seed, "Seed for sampling");
  app.add_option("--workers", g.workers, "Worker threads for census")->check(CLI::Range(1u, 256u));
  app.add_option("--out", g.out, "Write the report here instead of stdout");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check a table against a Leibniz identity");
  std::string validate_file, mode = "right";
  validate_cmd->add_option("file", validate_file, "Algebra JSON")->required();
  validate_cmd->add_option("--mode", mode, "right | left | lie");

  std::string algebra_file, subspace_file, other_file;

  auto* info_cmd = app.add_subcommand("info", "Structural invariants");
  info_cmd->add_option("--algebra", algebra_file)->required();

  auto* quasi_cmd = app.add_subcommand("quasi", "Quasi-ideal predicates");
  quasi_cmd->require_subcommand(1);
  auto* quasi_check = quasi_cmd->add_subcommand("check", "Decide whether a subspace is a quasi-ideal");
  bool with_oracle = false;
  quasi_check->add_option("--algebra", algebra_file)->required();
  quasi_check->add_option("--subspace", subspace_file, "JSON list of generators")->required();
  quasi_check->add_flag("--oracle", with_oracle, "Also run the definitional check (finite fields)");
  auto* quasi_list = quasi_cmd->add_subcommand("list", "All quasi-ideals (finite fields)");
  quasi_list->add_option("--algebra", algebra_file)->required();

  auto* core_cmd = app.add_subcommand("core", "Largest ideal inside a subspace");
  core_cmd->add_option("--algebra", algebra_file)->required();
  core_cmd->add_option("--subspace", subspace_file)->required();

  auto* series_cmd = app.add_subcommand("series", "Lower central, derived and square series");
  std::string kind;
  series_cmd->add_option("--algebra", algebra_file)->required();
  series_cmd->add_option("--subspace", subspace_file, "Subalgebra (default: the whole algebra)");
  series_cmd->add_option("--kind", kind, "lower_central | derived | omega_of_square (default: all)");

  auto* classify_cmd = app.add_subcommand("classify", "Match against the catalogue of class Q");
  classify_cmd->add_option("--algebra", algebra_file)->required();

  auto* family_cmd = app.add_subcommand("family", "Build a named family member");
  std::string family_name_arg, field_text, form_text;
  std::size_t dim = 3, dim_i = 1, dim_z = 0, form_rank = 1;
  std::vector<std::string> lambda_texts;
  family_cmd->add_option("name", family_name_arg)->required();
  family_cmd->add_option("--field", field_text, "gf2, gf(5), q, gf2(t), ...");
  family_cmd->add_option("--dim", dim, "Dimension (abelian, almost_abelian_lie)");
  family_cmd->add_option("--dim-i", dim_i, "dim I (non_lie_almost_abelian)");
  family_cmd->add_option("--dim-z", dim_z, "Extra central dimensions (extraspecial_sum)");
  family_cmd->add_option("--form", form_text, "Bilinear data as a JSON matrix (extraspecial_sum)");
  family_cmd->add_option("--form-rank", form_rank, "Rank of the shipped anisotropic form");
  family_cmd->add_option("--lambda", lambda_texts, "lambda_c values (thm46_char2, example44)");

  auto* census_cmd = app.add_subcommand("census", "Sweep multiplication tables over GF(q)");
  std::size_t census_dim = 2;
  std::optional<std::uint64_t> samples;
  bool exhaustive = false, no_lemmas = false;
  census_cmd->add_option("--field", field_text)->required();
  census_cmd->add_option("--dim", census_dim)->required();
  auto* ex_flag = census_cmd->add_flag("--exhaustive", exhaustive);
  census_cmd->add_option("--sample", samples, "Draw this many random tables")->excludes(ex_flag);
  census_cmd->add_flag("--no-lemmas", no_lemmas, "Skip the per-class lemma harness");

  auto* lemmas_cmd = app.add_subcommand("lemmas", "Lemma harness over an algebra or a family corpus");
  std::string corpus_field;
  std::size_t max_dim = 4, max_steps = 3;
  lemmas_cmd->add_option("--algebra", algebra_file);
  lemmas_cmd->add_option("--subspace", subspace_file, "Run one suite on the shortest chain from this subalgebra");
  lemmas_cmd->add_option("--max-steps", max_steps);
  lemmas_cmd->add_option("--corpus", corpus_field, "Field whose family corpus to check");
  lemmas_cmd->add_option("--max-dim", max_dim);

  auto* iso_cmd = app.add_subcommand("isomorphic", "Search for an isomorphism (small prime fields)");
  iso_cmd->add_option("--algebra", algebra_file)->required();
  iso_cmd->add_option("--other", other_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  g.budget_given = app.get_option("--budget")->count() > 0;

  try {
    if (*validate_cmd) {
      MultiplicationTable t = io::table_from_json(io::read_file(validate_file));
      IdentityCheck check = validate(t, parse_mode(mode));
      Json out{{"valid", check.holds}, {"mode", mode}};
      if (check.witness) {
        const auto& w = *check.witness;
        out["witness"] = {w[0], w[1], w[2]};
        out["witness_names"] = {t.basis_names()[w[0]], t.basis_names()[w[1]], t.basis_names()[w[2]]};
      }
      emit(g, out);
      return check.holds ? 0 : 1;
    }

    if (*info_cmd) {
      LeibnizAlgebra L = load_algebra(algebra_file);
      Json out = io::to_json(invariants_of(L));
      out["field"] = L.field().name();
      Json s;
      for (auto [name, k] : {std::pair{"lower_central", SeriesKind::lower_central}, std::pair{"derived", SeriesKind::derived},
                             std::pair{"omega_of_square", SeriesKind::omega_of_square}})
        s[name] = series_json(L, L.whole(), k)["dims"];
      out["series_dims"] = std::move(s);
      emit(g, out);
      return 0;
    }

    if (*quasi_check) {
      LeibnizAlgebra L = load_algebra(algebra_file);
      Subspace H = load_subspace(L, subspace_file);
      QuasiIdealVerdict v = is_quasi_ideal(L, H);
      Json out{{"subspace", io::to_json(H)}, {"is_subalgebra", is_subalgebra(L, H)}};
      out.update(io::to_json(L, v));
      if (with_oracle) out["oracle"] = is_quasi_ideal_oracle(L, H, g.budget);
      emit(g, out);
      return v.holds ? 0 : 1;
    }

    if (*quasi_list) {
      LeibnizAlgebra L = load_algebra(algebra_file);
      Json list = Json::array();
      std::size_t count = 0;
      for (const auto& S : all_subalgebras(L, g.budget)) {
        ++count;
        if (!is_quasi_ideal(L, S).holds) continue;
        list.push_back(Json{{"subspace", io::to_json(S)}, {"dim", S.dim()}, {"core_dim", core(L, S).dim()}, {"is_ideal", is_ideal(L, S)}});
      }
      emit(g, Json{{"subalgebras", count}, {"quasi_ideals", std::move(list)}});
      return 0;
    }

    if (*core_cmd) {
      LeibnizAlgebra L = load_algebra(algebra_file);
      Subspace H = load_subspace(L, subspace_file);
      Subspace C = core(L, H);
      emit(g, Json{{"subspace", io::to_json(H)}, {"core", io::to_json(C)}, {"core_free", C.dim() == 0}});
      return 0;
    }

    if (*series_cmd) {
      LeibnizAlgebra L = load_algebra(algebra_file);
      Subspace H = subspace_file.empty() ? L.whole() : load_subspace(L, subspace_file);
      Json out{{"subspace", io::to_json(H)}};
      if (!kind.empty()) {
        out[kind] = series_json(L, H, parse_kind(kind));
      } else {
        for (const char* k : {"lower_central", "derived", "omega_of_square"}) out[k] = series_json(L, H, parse_kind(k));
      }
      emit(g, out);
      return 0;
    }

    if (*classify_cmd) {
      LeibnizAlgebra L = load_algebra(algebra_file);
      ClassificationResult r = classify_q_member(L, g.budget);
      Json out = io::to_json(L, r);
      out["replays"] = replays(L, r, g.budget);
      emit(g, out);
      return 0;
    }

    if (*family_cmd) {
      auto fam = parse_family(family_name_arg);
      if (!fam) throw Error(ErrorCode::Parse, "unknown family '" + family_name_arg + "'");
      Field F = !field_text.empty() ? parse_field(field_text)
                : *fam == Family::example44 ? Field::rational_function(2)
                : (*fam == Family::k2 || *fam == Family::thm46_char2) ? Field::prime(2)
                                                                       : Field::rationals();
      FamilySpec spec = default_spec(*fam, F);
      spec.dim = dim;
      spec.dim_I = dim_i;
      spec.dim_Z = dim_z;
      spec.form_rank = form_rank;
      if (!form_text.empty()) {
        try {
          spec.form = io::matrix_from_json(F, Json::parse(form_text));
        } catch (const nlohmann::json::exception& e) {
          throw Error(ErrorCode::Parse, std::string("--form: ") + e.what());
        }
      }
      if (!lambda_texts.empty()) {
        spec.lambdas.clear();
        for (const auto& t : lambda_texts) spec.lambdas.push_back(parse_scalar(F, t));
      }
      emit(g, io::to_json(build(spec).table()));
      return 0;
    }

    if (*census_cmd) {
      SweepOptions opt;
      opt.exhaustive = !samples.has_value();
      if (samples) opt.samples = *samples;
      opt.seed = g.seed;
      opt.workers = g.workers;
      if (g.budget_given) opt.table_budget = g.budget;
      opt.run_lemmas = !no_lemmas;
      CensusReport r = sweep_tables(parse_field(field_text), census_dim, opt);
      emit(g, io::to_json(r));
      return r.lemmas.failures.empty() ? 0 : 1;
    }

    if (*lemmas_cmd) {
      if (algebra_file.empty() == corpus_field.empty()) throw Error(ErrorCode::Parse, "give exactly one of --algebra and --corpus");
      if (!corpus_field.empty()) {
        HarnessReport r = lemma_harness(family_corpus(parse_field(corpus_field), max_dim), g.budget);
        emit(g, io::to_json(r));
        return r.failures.empty() ? 0 : 1;
      }
      LeibnizAlgebra L = load_algebra(algebra_file);
      if (!subspace_file.empty()) {
        Subspace H = load_subspace(L, subspace_file);
        auto chain = subquasi_chain(L, H, max_steps, g.budget);
        if (!chain) throw Error(ErrorCode::PreconditionUnverified, "no subquasi-ideal chain within " + std::to_string(max_steps) + " steps");
        LemmaReport r = lemma_suite(L, *chain, g.budget);
        Json out{{"steps", chain->steps()}};
        Json terms = Json::array();
        for (const auto& s : chain->chain) terms.push_back(io::to_json(s));
        out["chain"] = std::move(terms);
        out.update(io::to_json(r));
        emit(g, out);
        return r.failures() == 0 ? 0 : 1;
      }
      HarnessReport r = lemma_harness(NamedAlgebra{algebra_file, L}, g.budget);
      emit(g, io::to_json(r));
      return r.failures.empty() ? 0 : 1;
    }

    if (*iso_cmd) {
      LeibnizAlgebra A = load_algebra(algebra_file), B = load_algebra(other_file);
      auto m = find_isomorphism(A, B, g.budget);
      Json out{{"isomorphic", m.has_value()}};
      if (m) {
        Json basis = Json::array();
        for (std::size_t i = 0; i < m->rows(); ++i) basis.push_back(A.format(m->row(i)));
        out["basis"] = std::move(basis);
      }
      emit(g, out);
      return m ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
