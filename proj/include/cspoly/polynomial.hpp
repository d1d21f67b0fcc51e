#ifndef CSPOLY_POLYNOMIAL_HPP
#define CSPOLY_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cspoly/rat.hpp"

namespace cspoly {

using Exponent = std::vector<int>;

/// Graded reverse lexicographic comparison: higher total degree first; on a
/// tie, the vector with the smaller last differing exponent comes first.
bool grevlex_greater(const Exponent& a, const Exponent& b);

/// Sparse polynomial in a fixed number of variables, exact coefficients.
/// No stored coefficient is zero.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rat>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rat& c);
  /// Coefficient times x_i (0-based).
  static Polynomial variable(std::size_t nvars, std::size_t i, const Rat& c = Rat(1));
  static Polynomial monomial(Exponent e, const Rat& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rat coeff(const Exponent& e) const;
  /// Maximum total degree; -1 for the zero polynomial.
  int degree() const;
  /// Set of total degrees that occur.
  std::vector<int> degrees() const;

  void add_term(const Exponent& e, const Rat& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rat& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
  friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * Rat(-1); }

  Polynomial derivative(std::size_t i) const;
  /// Multiplies by c_2 x_i^2 + c_1 x_i + c_0.
  Polynomial times_quadratic(std::size_t i, const Rat& c2, const Rat& c1, const Rat& c0) const;
  /// Exact quotient by (x_i − x_k). Throws InvariantViolation on a nonzero
  /// remainder.
  Polynomial divide_by_difference(std::size_t i, std::size_t k) const;
  /// Same with the variables of p permuted: x_j -> x_{perm[j]}.
  Polynomial permuted(const std::vector<std::size_t>& perm) const;

  Rat evaluate(const std::vector<Rat>& point) const;

  /// Terms in grevlex order, leading term first.
  std::vector<std::pair<Exponent, Rat>> sorted_terms() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace cspoly

#endif
