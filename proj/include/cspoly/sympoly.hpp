#ifndef CSPOLY_SYMPOLY_HPP
#define CSPOLY_SYMPOLY_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "cspoly/intvec.hpp"
#include "cspoly/polynomial.hpp"
#include "cspoly/rat.hpp"

namespace cspoly {

/// Distinct permutations of a vector, in lexicographic order.
std::vector<IntVec> orbit(const IntVec& v);

/// Symmetric polynomial in the monomial basis: sum of c_λ m_λ.
class SymPoly {
 public:
  using Terms = std::map<Partition, Rat>;

  explicit SymPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static SymPoly one(std::size_t nvars) { return constant(nvars, Rat(1)); }
  static SymPoly constant(std::size_t nvars, const Rat& c);
  static SymPoly monomial(const Partition& lam, const Rat& c = Rat(1));
  /// Collects a polynomial into the monomial basis. Throws InvariantViolation
  /// if p is not symmetric.
  static SymPoly from_polynomial(const Polynomial& p);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rat coeff(const Partition& lam) const;
  int degree() const;
  bool is_homogeneous() const;
  /// Homogeneous of degree d (the zero polynomial counts).
  bool is_homogeneous_of(long d) const;

  void add_term(const Partition& lam, const Rat& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Rat& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rat& c) { return a *= c; }
  friend SymPoly operator*(const Rat& c, SymPoly a) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);

  Polynomial expand() const;
  Rat evaluate(const std::vector<Rat>& point) const;

  /// Terms with partitions in grevlex order, leading term first.
  std::vector<std::pair<Partition, Rat>> sorted_terms() const;

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  std::size_t nvars_;
  Terms terms_;
};

SymPoly poly_add(const SymPoly& a, const SymPoly& b);
SymPoly poly_scale(const SymPoly& a, const Rat& c);
SymPoly poly_mul(const SymPoly& a, const SymPoly& b);
Rat evaluate(const SymPoly& p, const std::vector<Rat>& point);

}  // namespace cspoly

#endif
