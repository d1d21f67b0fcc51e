#ifndef CSPOLY_GENFUNC_HPP
#define CSPOLY_GENFUNC_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "cspoly/intvec.hpp"
#include "cspoly/matrix.hpp"
#include "cspoly/polynomial.hpp"
#include "cspoly/rat.hpp"
#include "cspoly/sympoly.hpp"

namespace cspoly {

/// Expansion in the overcomplete family f_n; keys need not be partitions.
using FExpansion = std::map<IntVec, Rat>;
/// Expansion in the basis g_λ.
using GExpansion = std::map<Partition, Rat>;

/// Coefficient of t^d in prod_j (1 − x_j t)^(−κ). Memoized.
SymPoly g_row(int d, std::size_t N, const Rat& kappa);
/// g_λ = prod_i g_row(λ_i). Memoized.
SymPoly g_partition(const Partition& lam, const Rat& kappa);

/// f_n written in the g basis by summing over the pair exponents p_jk.
GExpansion f_in_g_basis(const IntVec& n, const Rat& kappa);
/// f_n as a symmetric polynomial (zero when no pair tuple is admissible).
SymPoly f_vector(const IntVec& n, const Rat& kappa);
/// Σ c_m f_m.
SymPoly expand_f(const FExpansion& e, std::size_t N, const Rat& kappa);
/// Σ c_λ g_λ.
SymPoly expand_g(const GExpansion& e, std::size_t N, const Rat& kappa);
/// Writes p in the g basis by solving one linear system per weight.
GExpansion to_g_basis(const SymPoly& p, const Rat& kappa);

/// Formal series of a product of factors (1 − r)^c, where each ratio r is
/// u_i / y_k (an "x" factor) or y_j / y_k (a "pair" factor). The two kinds
/// are expanded separately, truncated by order, and combined only when a
/// coefficient is extracted.
class GeneratingSeries {
 public:
  struct Factor {
    std::size_t num;  // x index for x factors, y index for pair factors
    std::size_t den;  // y index
    Rat exponent;
  };

  /// nx numerator variables, ny denominators. Throws InputError on
  /// a pair factor with num >= den (outside the region of convergence).
  GeneratingSeries(std::size_t nx, std::size_t ny, std::vector<Factor> x_factors,
                   std::vector<Factor> pair_factors, int max_x_degree, int max_pair_order);

  /// Series of the f_n generating function with N variables.
  static GeneratingSeries standard(std::size_t N, const Rat& kappa, int max_x_degree,
                                   int max_pair_order);
  /// Series of the two-species generating function; y ordering is
  /// (y_1..y_N, ỹ_1..ỹ_Ñ) and x ordering (x_1..x_N, x̃_1..x̃_Ñ).
  static GeneratingSeries deformed(std::size_t N, std::size_t Ntilde, const Rat& kappa,
                                   int max_x_degree, int max_pair_order);

  /// Coefficient of y^(−n), keeping pair terms of order at most pair_order.
  /// Throws InputError if the request exceeds the computed truncation.
  Polynomial coefficient(const IntVec& n, int pair_order) const;

  int max_x_degree() const { return max_x_degree_; }
  int max_pair_order() const { return max_pair_order_; }

 private:
  using Key = std::vector<int>;  // y exponents followed by the extra grading
  std::size_t nx_, ny_;
  int max_x_degree_, max_pair_order_;
  // (y exponent) -> x polynomial
  std::map<Key, Polynomial> x_part_;
  // (y exponent, order) -> coefficient
  std::map<Key, Rat> pair_part_;
};

/// Sufficient pair order for extracting the coefficient of y^(−n):
/// max(0, Σ_i (i−1) n_i).
int pair_order_bound(const IntVec& n);
/// The truncation order used for n: max of |n| + N max(0, −min n) + 2 and
/// |n| + pair_order_bound(n).
int truncation_order(const IntVec& n);

/// f_n read off the truncated generating series. Recomputes with the
/// truncation raised by 2 and throws InvariantViolation on any difference.
SymPoly f_truncated_series(const IntVec& n, const Rat& kappa);

struct FToMMatrix {
  std::vector<Partition> labels;  // rows (f_λ) and columns (m_μ)
  RatMatrix matrix;
  /// Determinant of each weight block, index = weight.
  std::vector<Rat> block_determinants;
};

/// Monomial coefficients of f_λ for all |λ| <= maxweight. Labels are sorted by
/// weight, then by a linear extension of the suffix order.
FToMMatrix f_to_m_matrix(int maxweight, std::size_t N, const Rat& kappa);

/// Index (n, ñ) of the two-species family.
struct DeformedIndex {
  IntVec n;
  IntVec ntilde;
};

/// f_{n,ñ} in the variables (x_1..x_N, x̃_1..x̃_Ñ). Throws InputError when κ = 0.
Polynomial deformed_f(const DeformedIndex& idx, std::size_t N, std::size_t Ntilde,
                      const Rat& kappa);

/// Removes every memoized g value.
void clear_g_cache();

}  // namespace cspoly

#endif
