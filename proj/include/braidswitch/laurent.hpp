#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "braidswitch/braid_word.hpp"

namespace braidswitch {

/// Element of Z[s, s^-1], stored as a sparse exponent -> coefficient map.
/// Zero coefficients are never stored, so equality is structural.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT: integers embed into the ring.

  static LaurentPoly monomial(int exponent, Coeff coeff = 1);

  const std::map<int, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coeff(int exponent) const;

  /// s -> s^-1. Integer coefficients are fixed by the involution.
  LaurentPoly involute() const;

  /// True for +-s^k, the units of the ring.
  bool is_unit() const;
  /// Exact inverse of a unit; throws std::domain_error otherwise.
  LaurentPoly unit_inverse() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form, e.g. "-s^2 + 1 + s^-1".
  std::string str() const;

 private:
  void add_term(int exponent, Coeff coeff);

  std::map<int, Coeff> terms_;
};

inline LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly poly_neg(const LaurentPoly& a) { return -a; }
inline LaurentPoly monomial(int exponent, LaurentPoly::Coeff coeff) { return LaurentPoly::monomial(exponent, coeff); }

/// 2x2 matrix over Z[s, s^-1], row-major.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(LaurentPoly a00, LaurentPoly a01, LaurentPoly a10, LaurentPoly a11)
      : e_{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

  static LaurentMatrix identity() { return {1, 0, 0, 1}; }

  const LaurentPoly& operator()(int r, int c) const { return e_[2 * r + c]; }
  LaurentPoly& operator()(int r, int c) { return e_[2 * r + c]; }

  LaurentPoly det() const;
  /// Conjugate transpose under s -> s^-1.
  LaurentMatrix star() const;
  /// Exact inverse via the adjugate; requires a unit determinant.
  LaurentMatrix inverse() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const LaurentPoly& k, const LaurentMatrix& m);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  std::string str() const;

 private:
  std::array<LaurentPoly, 4> e_;
};

inline LaurentMatrix star(const LaurentMatrix& m) { return m.star(); }

enum class Representation {
  reduced,  ///< Reduced Burau matrices with t = s^2.
  squier,   ///< Squier's J-unitary variant.
};

/// Generator matrix for sigma_index (sign -1 gives the exact inverse).
LaurentMatrix burau_generator(int index, Representation rep, int sign = 1);
LaurentMatrix burau_generator(const BraidGenerator& g, Representation rep);

/// Ordered product of generator matrices; the identity word maps to I.
LaurentMatrix evaluate_word(const BraidWord& w, Representation rep);

/// Squier's Hermitian form ((s + s^-1, -1), (-1, s + s^-1)).
LaurentMatrix squier_form();

/// diag(1, s^-1), the similarity carrying the Squier matrices to the reduced ones.
LaurentMatrix similarity_diagonal();

/// The pair of generator matrices a check runs against. Defaults to the true
/// generators; verification tooling can substitute perturbed ones.
struct GeneratorPair {
  LaurentMatrix first;
  LaurentMatrix second;

  static GeneratorPair of(Representation rep) {
    return {burau_generator(1, rep), burau_generator(2, rep)};
  }
};

/// Word evaluation against an explicit generator pair (inverses via adjugate).
LaurentMatrix evaluate_word(const BraidWord& w, const GeneratorPair& gens);

bool check_braid_relation(const GeneratorPair& gens);
inline bool check_braid_relation(Representation rep) { return check_braid_relation(GeneratorPair::of(rep)); }

/// beta_i^* J beta_i == J for both generators.
bool check_j_unitarity(const GeneratorPair& squier, const LaurentMatrix& form);
inline bool check_j_unitarity() { return check_j_unitarity(GeneratorPair::of(Representation::squier), squier_form()); }

/// psi_i == D^-1 beta_i D, and psi_i^* Jt psi_i == Jt with Jt = D^* J D.
bool check_similarity(const GeneratorPair& squier, const GeneratorPair& reduced);
inline bool check_similarity() {
  return check_similarity(GeneratorPair::of(Representation::squier), GeneratorPair::of(Representation::reduced));
}

}  // namespace braidswitch
