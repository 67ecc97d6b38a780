#include "leibniz/families.hpp"

#include <array>

namespace leibniz {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kNames{{
    {Family::abelian, "abelian"},
    {Family::almost_abelian_lie, "almost_abelian_lie"},
    {Family::k2, "k2"},
    {Family::non_lie_almost_abelian, "non_lie_almost_abelian"},
    {Family::two_dim_nilpotent_cyclic, "two_dim_nilpotent_cyclic"},
    {Family::thm45i_solvable, "thm45i_solvable"},
    {Family::extraspecial_sum, "extraspecial_sum"},
    {Family::thm46_char2, "thm46_char2"},
    {Family::example44, "example44"},
}};

std::vector<std::string> numbered(std::string_view stem, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(std::string(stem) + std::to_string(i));
  return out;
}

void require_dim(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadDimension, what);
}

// q(v) = v B v^T
Scalar quadratic_value(const Matrix& B, const Vector& v) {
  Scalar total = B.field().zero();
  for (std::size_t i = 0; i < B.rows(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < B.cols(); ++j) total += v[i] * B(i, j) * v[j];
  }
  return total;
}

LeibnizAlgebra finish(MultiplicationTable table, bool symmetric) {
  LeibnizAlgebra L(std::move(table));
  if (symmetric) {
    auto left = validate(L.table(), Identity::left);
    if (!left.holds) {
      const auto& w = *left.witness;
      throw Error(ErrorCode::NotLeibniz, "left identity fails on basis triple (" + std::to_string(w[0]) + "," +
                                             std::to_string(w[1]) + "," + std::to_string(w[2]) + ")");
    }
  }
  return L;
}

LeibnizAlgebra build_extraspecial(const FamilySpec& spec) {
  const Field& F = spec.field;
  Matrix B = spec.form ? *spec.form : default_anisotropic_form(F, spec.form_rank);
  require_dim(B.rows() == B.cols() && B.rows() >= 1, "extraspecial form must be a nonempty square matrix");
  if (!(B.field() == F)) throw Error(ErrorCode::MixedFields, "form field differs from the family field");

  Anisotropy an = form_anisotropy(B);
  if (!an.decided) throw Error(ErrorCode::PreconditionUnverified, "anisotropy of the supplied form is undecided over " + F.name());
  if (!an.anisotropic) throw Error(ErrorCode::IsotropicForm, "q vanishes at " + an.isotropic_vector->to_string());

  const std::size_t k = B.rows();
  const std::size_t n = k + 1 + spec.dim_Z;
  auto names = numbered("e", k);
  names.push_back("z");
  for (auto& w : numbered("w", spec.dim_Z)) names.push_back(w);

  MultiplicationTable t(F, n, names);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t(i, j, k) = B(i, j);
  return finish(std::move(t), true);
}

LeibnizAlgebra build_thm46(const FamilySpec& spec, std::vector<std::string> c_names) {
  const Field& F = spec.field;
  const std::size_t k = spec.lambdas.size();
  require_dim(k >= 1, "at least one lambda is required");

  // Squares are rejected before the characteristic so that perfect fields of
  // odd characteristic still report the square input.
  for (std::size_t i = 0; i < k; ++i) {
    if (!(spec.lambdas[i].field() == F)) throw Error(ErrorCode::MixedFields, "lambda outside the family field");
    if (is_square(spec.lambdas[i]))
      throw Error(ErrorCode::SquareLambda, "lambda_" + c_names[i] + " = " + spec.lambdas[i].to_string() + " is a square");
  }
  if (F.characteristic() != 2) throw Error(ErrorCode::BadCharacteristic, "requires characteristic 2, got " + F.name());

  // [u,u] = (sum lambda_i a_i^2 + b^2) z must vanish only at u in Fz. Over
  // GF(2)(t) every element is a^2 + t b^2, so two lambdas always combine.
  if (k >= 2) {
    auto [a1, b1] = square_class_split(spec.lambdas[0]);
    auto [a2, b2] = square_class_split(spec.lambdas[1]);
    (void)a1;
    (void)a2;
    throw Error(ErrorCode::SquareLambda, "(" + b2.to_string() + ")^2*lambda_" + c_names[0] + " + (" + b1.to_string() +
                                             ")^2*lambda_" + c_names[1] + " is a square");
  }

  const std::size_t z = k, h = k + 1, n = k + 2;
  c_names.push_back("z");
  c_names.push_back("h");
  MultiplicationTable t(F, n, c_names);
  for (std::size_t i = 0; i < k; ++i) {
    t(i, i, z) = spec.lambdas[i];
    t(i, h, i) = F.one();
    t(h, i, i) = F.one();
  }
  if (spec.lambda_offdiag) {
    const Matrix& mu = *spec.lambda_offdiag;
    require_dim(mu.rows() == k && mu.cols() == k, "off-diagonal data must be k x k");
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        t(i, j, z) = mu(i, j);
        t(j, i, z) = mu(i, j);
      }
  }
  t(h, h, z) = F.one();
  return finish(std::move(t), true);
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kNames)
    if (f == family) return name;
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kNames)
    if (n == name) return f;
  return std::nullopt;
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& entry : kNames) out.push_back(entry.first);
  return out;
}

FamilySpec default_spec(Family family, const Field& field) {
  FamilySpec spec{family, field};
  if (family == Family::thm46_char2 || family == Family::example44)
    spec.lambdas = {field.kind() == Field::Kind::rational_function ? field.indeterminate() : field.one()};
  return spec;
}

LeibnizAlgebra build(const FamilySpec& spec) {
  const Field& F = spec.field;
  const Scalar one = F.one();
  switch (spec.family) {
    case Family::abelian: {
      require_dim(spec.dim >= 1, "abelian algebra needs dim >= 1");
      return finish(MultiplicationTable(F, spec.dim), false);
    }
    case Family::almost_abelian_lie: {
      require_dim(spec.dim >= 2, "almost abelian Lie algebra needs dim >= 2");
      const std::size_t a = spec.dim - 1;
      auto names = numbered("x", a);
      names.push_back("a");
      MultiplicationTable t(F, spec.dim, names);
      for (std::size_t i = 0; i < a; ++i) {
        t(i, a, i) = one;
        t(a, i, i) = -one;
      }
      return finish(std::move(t), false);
    }
    case Family::k2: {
      if (F.characteristic() != 2) throw Error(ErrorCode::BadCharacteristic, "k2 requires characteristic 2, got " + F.name());
      MultiplicationTable t(F, 3, {"x", "y", "z"});
      // [x,y]=z, [y,z]=y, [z,x]=x and antisymmetry (signs vanish in char 2).
      t(0, 1, 2) = one;
      t(1, 0, 2) = -one;
      t(1, 2, 1) = one;
      t(2, 1, 1) = -one;
      t(2, 0, 0) = one;
      t(0, 2, 0) = -one;
      return finish(std::move(t), false);
    }
    case Family::non_lie_almost_abelian: {
      const std::size_t k = spec.dim_I;
      require_dim(k >= 1, "dim I must be at least 1");
      std::vector<std::string> names = k == 1 ? std::vector<std::string>{"x"}
                                       : k == 2 ? std::vector<std::string>{"x", "y"}
                                                : numbered("x", k);
      names.push_back("h");
      MultiplicationTable t(F, k + 1, names);
      for (std::size_t i = 0; i < k; ++i) t(i, k, i) = one;
      return finish(std::move(t), false);
    }
    case Family::two_dim_nilpotent_cyclic:
    case Family::thm45i_solvable: {
      MultiplicationTable t(F, 2, {"b", "a"});
      t(0, 0, 1) = one;
      if (spec.family == Family::thm45i_solvable) t(1, 0, 1) = one;
      return finish(std::move(t), false);
    }
    case Family::extraspecial_sum:
      return build_extraspecial(spec);
    case Family::thm46_char2: {
      auto names = spec.lambdas.size() == 1 ? std::vector<std::string>{"c"} : numbered("c", spec.lambdas.size());
      return build_thm46(spec, names);
    }
    case Family::example44: {
      require_dim(spec.lambdas.size() == 1, "example44 has exactly one c");
      return build_thm46(spec, {"c"});
    }
  }
  throw Error(ErrorCode::Parse, "unknown family");
}

std::vector<LeibnizAlgebra> two_dim_catalogue(const Field& field) {
  return {build(FamilySpec{Family::two_dim_nilpotent_cyclic, field}), build(FamilySpec{Family::thm45i_solvable, field})};
}

Matrix default_anisotropic_form(const Field& field, std::size_t rank) {
  Matrix B(field, rank, rank);
  if (rank == 1) {
    B(0, 0) = field.one();
    return B;
  }
  require_dim(rank == 2, "no shipped anisotropic form of rank " + std::to_string(rank));
  B(0, 0) = field.one();
  if (field.kind() == Field::Kind::prime) {
    if (field.p() == 2) {
      B(0, 1) = field.one();  // x^2 + xy + y^2
      B(1, 1) = field.one();
      return B;
    }
    // x^2 - d y^2 with d the least non-residue; diag(1,1) over GF(3).
    for (std::uint64_t d = 2; d < field.p(); ++d) {
      Scalar s = field.element(d);
      if (!is_square(s)) {
        B(1, 1) = -s;
        return B;
      }
    }
  }
  if (field.kind() == Field::Kind::rationals) {
    B(1, 1) = field.one();
    return B;
  }
  // GF(p)(t): x^2 + t y^2 in characteristic 2, x^2 - t y^2 otherwise.
  B(1, 1) = field.p() == 2 ? field.indeterminate() : -field.indeterminate();
  return B;
}

Anisotropy form_anisotropy(const Matrix& B, std::uint64_t budget) {
  const Field& F = B.field();
  const std::size_t k = B.rows();
  Anisotropy out;
  if (k == 0) {
    out.anisotropic = true;
    return out;
  }
  if (F.is_finite()) {
    out.anisotropic = true;
    for_each_projective_point(
        F, k,
        [&](const Vector& v) {
          if (out.anisotropic && quadratic_value(B, v).is_zero()) {
            out.anisotropic = false;
            out.isotropic_vector = v;
          }
        },
        budget);
    return out;
  }
  if (k == 1) {
    out.anisotropic = !B(0, 0).is_zero();
    if (!out.anisotropic) out.isotropic_vector = Vector::unit(F, 1, 0);
    return out;
  }
  if (k != 2) {
    out.decided = false;
    return out;
  }

  // q(x, y) = a x^2 + b xy + c y^2
  const Scalar a = B(0, 0), b = B(0, 1) + B(1, 0), c = B(1, 1);
  if (a.is_zero()) {
    out.isotropic_vector = Vector::unit(F, 2, 0);
    return out;
  }
  if (F.characteristic() != 2) {
    Scalar disc = b * b - F.from_int(4) * a * c;
    auto root = square_root(disc);
    out.anisotropic = !root;
    if (root) out.isotropic_vector = Vector(F, {(*root - b) / (F.from_int(2) * a), F.one()});
    return out;
  }
  if (!b.is_zero()) {
    // Needs an Artin-Schreier root of s^2 + s + ac/b^2; not attempted.
    out.decided = false;
    return out;
  }
  auto root = square_root(c / a);
  out.anisotropic = !root;
  if (root) out.isotropic_vector = Vector(F, {*root, F.one()});
  return out;
}

std::pair<Scalar, Scalar> square_class_split(const Scalar& f) {
  const Field& F = f.field();
  if (F.kind() != Field::Kind::rational_function || F.p() != 2)
    throw Error(ErrorCode::UnsupportedField, "square classes are split only over GF(2)(t)");
  // f = N/D = N D / D^2, and N D = E(t)^2 + t O(t)^2 over GF(2).
  const auto& rf = f.function();
  poly::Poly P = poly::mul(rf.num, rf.den, 2);
  poly::Poly even, odd;
  for (std::size_t i = 0; i < P.size(); ++i) (i % 2 == 0 ? even : odd).push_back(P[i]);
  poly::trim(even);
  poly::trim(odd);
  return {Scalar::rational_function(F, even, rf.den), Scalar::rational_function(F, odd, rf.den)};
}

std::vector<NamedAlgebra> family_corpus(const Field& field, std::size_t max_dim) {
  std::vector<NamedAlgebra> out;
  auto add = [&](std::string name, const FamilySpec& spec) {
    try {
      LeibnizAlgebra L = build(spec);
      if (L.dim() <= max_dim) out.push_back({std::move(name), std::move(L)});
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::BadCharacteristic:
        case ErrorCode::SquareLambda:
        case ErrorCode::IsotropicForm:
        case ErrorCode::BadDimension:
          break;  // not constructible over this field
        default:
          throw;
      }
    }
  };
  for (std::size_t n = 1; n <= max_dim; ++n) {
    FamilySpec s{Family::abelian, field};
    s.dim = n;
    add("abelian(dim=" + std::to_string(n) + ")", s);
  }
  for (std::size_t n = 2; n <= max_dim; ++n) {
    FamilySpec s{Family::almost_abelian_lie, field};
    s.dim = n;
    add("almost_abelian_lie(dim=" + std::to_string(n) + ")", s);
  }
  add("k2", FamilySpec{Family::k2, field});
  for (std::size_t k = 1; k + 1 <= max_dim; ++k) {
    FamilySpec s{Family::non_lie_almost_abelian, field};
    s.dim_I = k;
    add("non_lie_almost_abelian(dim_I=" + std::to_string(k) + ")", s);
  }
  add("two_dim_nilpotent_cyclic", FamilySpec{Family::two_dim_nilpotent_cyclic, field});
  add("thm45i_solvable", FamilySpec{Family::thm45i_solvable, field});
  for (std::size_t rank = 1; rank <= 2; ++rank)
    for (std::size_t z = 0; rank + 1 + z <= max_dim; ++z) {
      FamilySpec s{Family::extraspecial_sum, field};
      s.form_rank = rank;
      s.dim_Z = z;
      add("extraspecial_sum(rank=" + std::to_string(rank) + ",dim_Z=" + std::to_string(z) + ")", s);
    }
  add("thm46_char2", default_spec(Family::thm46_char2, field));
  add("example44", default_spec(Family::example44, field));
  return out;
}

}  // namespace leibniz
