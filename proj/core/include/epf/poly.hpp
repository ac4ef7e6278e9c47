// Copyright 2026 The epf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPF_POLY_HPP
#define EPF_POLY_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace epf {

/// Sparse multivariate polynomial with real coefficients.
///
/// Terms are kept sorted lexicographically by exponent vector and zero
/// coefficients are never stored, so equal polynomials have equal
/// representations. The number of variables is fixed at construction
/// (at most kMaxVars); exponents are per-variable degrees.
class Poly {
 public:
  static constexpr int kMaxVars = 8;
  using ExpVec = std::array<std::uint8_t, kMaxVars>;

  struct Term {
    ExpVec exps{};
    double coeff = 0.0;
  };

  explicit Poly(int num_vars);

  static Poly zero(int num_vars) { return Poly(num_vars); }
  static Poly constant(int num_vars, double value);
  /// Single monomial c * x1^e1 ... xp^ep. Exponents beyond num_vars must be 0.
  static Poly monomial(int num_vars, const ExpVec& exps, double coeff);
  /// Convenience for the univariate monomial c * x^e.
  static Poly monomial1(int exp, double coeff);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  std::span<const Term> terms() const { return terms_; }

  /// Coefficient of the given monomial (0 if absent).
  double coeff(const ExpVec& exps) const;
  double coeff1(int exp) const;

  /// Adds c * x^exps in place.
  void add_term(const ExpVec& exps, double coeff);

  /// Exact polynomial evaluation at the given point (one value per variable).
  double eval(std::span<const double> point) const;
  double eval1(double x) const;

  Poly& operator+=(const Poly& other);
  Poly& operator*=(double k);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(Poly a, double k) { return a *= k; }
  friend Poly operator*(double k, Poly a) { return a *= k; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  /// Substitutes variable 0 := a + b*y in a univariate polynomial and returns
  /// the expanded univariate polynomial in y.
  Poly substitute_affine(double a, double b) const;

  /// Debug dump, one line per term: "e1 e2 ... ep : coeff", sorted
  /// lexicographically by exponent vector.
  std::string to_string() const;

 private:
  void normalize();

  int num_vars_;
  std::vector<Term> terms_;  // sorted by exps, no zero coeffs
};

}  // namespace epf

#endif  // EPF_POLY_HPP
