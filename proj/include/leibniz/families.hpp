#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

enum class Family {
  abelian,
  almost_abelian_lie,        ///< L = A + Fa, A abelian, [v,a] = v, [a,v] = -v
  k2,                        ///< char 2: [x,y]=z, [y,z]=y, [z,x]=x
  non_lie_almost_abelian,    ///< L = I + Fh, [x,h] = x, [h,x] = [h,h] = 0
  two_dim_nilpotent_cyclic,  ///< [b,b] = a
  thm45i_solvable,           ///< [b,b] = a, [a,b] = a
  extraspecial_sum,          ///< E + Z, [e_i,e_j] = B_ij z, Z central
  thm46_char2,               ///< C + Fz + Fh, [c,c] = lambda_c z, [c,h]=[h,c]=c, [h,h]=z
  example44,                 ///< thm46_char2 with one c and lambda = t over GF(2)(t)
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);
std::vector<Family> all_families();

struct FamilySpec {
  Family family;
  Field field;
  /// Total dimension (abelian, almost_abelian_lie).
  std::size_t dim = 3;
  /// dim I for non_lie_almost_abelian.
  std::size_t dim_I = 1;
  /// Bilinear data [e_i, e_j] = form(i, j) z for extraspecial_sum; when absent
  /// the shipped anisotropic form of rank `form_rank` is used.
  std::optional<Matrix> form;
  std::size_t form_rank = 1;
  /// Extra central dimensions for extraspecial_sum.
  std::size_t dim_Z = 0;
  /// lambda_c for each basis vector of C (thm46_char2, example44).
  std::vector<Scalar> lambdas;
  /// Symmetric off-diagonal [c_i, c_j] = [c_j, c_i] coefficients.
  std::optional<Matrix> lambda_offdiag;
};

/// Builds and validates the family member. Errors: BadCharacteristic,
/// SquareLambda, IsotropicForm, BadDimension.
LeibnizAlgebra build(const FamilySpec& spec);
/// A spec with default parameters for `family` over `field`.
FamilySpec default_spec(Family family, const Field& field);

/// The two non-Lie two-dimensional algebras: [b,b]=a alone, and with [a,b]=a.
std::vector<LeibnizAlgebra> two_dim_catalogue(const Field& field);

/// Shipped anisotropic forms: x^2 (rank 1, any field), x^2+xy+y^2 over GF(2),
/// x^2+y^2 over GF(3).
Matrix default_anisotropic_form(const Field& field, std::size_t rank);

struct Anisotropy {
  bool decided = true;
  bool anisotropic = false;
  std::optional<Vector> isotropic_vector;  ///< v != 0 with q(v) = 0
};

/// q(v) = sum_ij v_i B_ij v_j. Finite fields: every projective point.
/// Infinite fields: ranks 1 and 2 (binary forms by discriminant or square
/// classes); higher ranks are reported undecided.
Anisotropy form_anisotropy(const Matrix& bilinear, std::uint64_t budget = kDefaultBudget);

/// Over GF(2)(t), writes f = a^2 + t b^2.
std::pair<Scalar, Scalar> square_class_split(const Scalar& f);

struct NamedAlgebra {
  std::string name;
  LeibnizAlgebra algebra;
};

/// Every family instance of dimension <= max_dim constructible over `field`.
std::vector<NamedAlgebra> family_corpus(const Field& field, std::size_t max_dim);

}  // namespace leibniz
