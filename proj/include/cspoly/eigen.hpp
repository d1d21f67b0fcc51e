#ifndef CSPOLY_EIGEN_HPP
#define CSPOLY_EIGEN_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cspoly/errors.hpp"
#include "cspoly/genfunc.hpp"
#include "cspoly/intvec.hpp"
#include "cspoly/matrix.hpp"
#include "cspoly/operators.hpp"
#include "cspoly/rat.hpp"
#include "cspoly/sympoly.hpp"

namespace cspoly {

/// b_n(m) = 0 for an index the recursion needs.
class ResonanceError : public Error {
 public:
  ResonanceError(IntVec n, IntVec m, Rat b);
  const IntVec& n() const { return n_; }
  const IntVec& m() const { return m_; }
  const Rat& b() const { return b_; }

 private:
  IntVec n_, m_;
  Rat b_;
};

/// E^{pν}_{jk} = (1 − ν)e_j + (1 − p + ν)e_k, 0-based j <= k.
/// The Calogero moves E^ν_{jk} are the p = 0 moves with ν shifted:
/// E^ν_{jk} = E^{0,ν}_{jk} for j < k, and E^0_{jj} = E^{0,1}_{jj} = 2e_j.
struct Move {
  std::size_t j = 0, k = 0;
  int p = 0;
  int nu = 0;

  /// Displacement for a general-scheme move.
  IntVec displacement(std::size_t N) const;
  /// Displacement for a Calogero move, (1 − ν)e_j + (1 + ν)e_k.
  IntVec calogero_displacement(std::size_t N) const;

  friend bool operator==(const Move&, const Move&) = default;
};

/// 2κ(κ−1)ν(1 − δ_jk) − m⁺_j(m⁺_j + 1)δ_ν0 δ_jk.
Rat g_move_coeff_calogero(const Move& move, const IntVec& m, const Rat& kappa);
/// Off-diagonal κ(κ−1)α_p(2ν − p). Diagonal (ν = 1 only): p = 0 gives
/// −m⁺_j α₀(m⁺_j + 1); p = 1 gives −m⁺_j(α₁(m⁺_j + κ + 1) − β₀) in the
/// printed form and −m⁺_j(α₁(m⁺_j − κ) + β₀) in the consistent form.
Rat g_move_coeff_general(const Move& move, const IntVec& m, const ModelSpec& model,
                         CoefficientForm form = CoefficientForm::printed);

enum class Scheme { calogero, general };

/// A move from `upper` down to `lower` = upper − E with its coefficient
/// g(E; lower).
struct MoveStep {
  Move move;
  IntVec lower;
  Rat coeff;
};

/// All moves from `upper` whose lower point satisfies 0 ⪯ lower and whose
/// coefficient is nonzero.
std::vector<MoveStep> moves_down(const IntVec& upper, const ModelSpec& model, Scheme scheme,
                                 CoefficientForm form = CoefficientForm::consistent);

/// u_n(m) keyed by m; always holds entries[root] = 1; zero values are not
/// stored. Keys lie in {m : 0 ⪯ m ⪯ root} ∪ {root}.
struct CoeffTable {
  IntVec root;
  std::map<IntVec, Rat> entries;
  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

CoeffTable u_coeffs_calogero(const IntVec& n, std::size_t N, const Rat& kappa);
/// Sums over ordered move sequences with weight Π g / (4^s s!).
CoeffTable u_coeffs_calogero_closed(const IntVec& n, std::size_t N, const Rat& kappa);
/// Throws ResonanceError when b_n(m) = 0 for a reachable m.
CoeffTable u_coeffs_general(const ModelSpec& model, const IntVec& n,
                            CoefficientForm form = CoefficientForm::consistent);
/// Sums over ordered move sequences with weight Π g / b_n.
CoeffTable u_coeffs_general_closed(const ModelSpec& model, const IntVec& n,
                                   CoefficientForm form = CoefficientForm::consistent);

struct EigenResult {
  IntVec index;
  Rat eigenvalue;
  FExpansion f_expansion;
  SymPoly poly;
};

/// P_n = Σ_m u_n(m) f_m.
EigenResult assemble_P(const IntVec& n, const CoeffTable& table, const Rat& kappa,
                       const std::optional<Rat>& eigenvalue = std::nullopt);

/// P_n for the model: the hermite preset goes through the Calogero
/// recursion, every other model through the general one.
EigenResult eigenfunction(const ModelSpec& model, const IntVec& n,
                          CoefficientForm form = CoefficientForm::consistent);

/// Eigenvalue reported with P_n: 2|n| for hermite, Ẽ_n otherwise.
Rat model_eigenvalue(const ModelSpec& model, const IntVec& n,
                     CoefficientForm form = CoefficientForm::consistent);

struct EigenCheck {
  bool is_eigenvector = false;
  std::optional<Rat> recovered_eigenvalue;
  bool matches_formula = false;
};

/// Applies sign·D to result.poly and compares with result.eigenvalue.
EigenCheck oracle_eigen_check(const ModelSpec& model, const EigenResult& result, int sign = -1);

/// The image of sign·D applied to p if it is a multiple of p.
std::optional<Rat> eigenvalue_of(const ModelSpec& model, const SymPoly& p, int sign = -1);

struct TriangularSolution {
  /// Present unless the solve hit a degeneracy.
  std::optional<SymPoly> poly;
  /// μ with the same diagonal value and no coupling; their coefficient is 0.
  std::vector<Partition> free_directions;
  /// μ with the same diagonal value and nonzero coupling.
  std::optional<Partition> blocking;
  /// Partitions spanning the subspace, in solve order.
  std::vector<Partition> basis;
};

/// Eigenvector of sign·D in span{m_μ : μ ≤ λ in dominance} with coefficient
/// 1 on m_λ. Throws InvariantViolation if the span is not invariant or the
/// matrix is not triangular.
TriangularSolution monomial_triangular_solve(const ModelSpec& model, const Partition& lam,
                                             const Rat& target_eigenvalue, int sign = -1);

struct CompletenessReport {
  std::vector<Partition> labels;
  RatMatrix p_to_m;
  std::size_t rank = 0;
  Rat determinant;
  bool invertible = false;
  /// The P → g matrix is unitriangular in a linear extension of ⪯.
  bool g_unitriangular = false;
};

CompletenessReport completeness_check(const ModelSpec& model, int maxweight,
                                      CoefficientForm form = CoefficientForm::consistent);

struct ActionReport {
  bool holds = false;
  SymPoly residual;
};

/// −D f_n = Ẽ_n f_n + Σ g(E; n − E) f_{n−E} over the moves from n.
ActionReport general_action_check(const ModelSpec& model, const IntVec& n,
                                  CoefficientForm form = CoefficientForm::consistent);

/// A grid point of the convention harness.
struct ConventionCandidate {
  int sign = -1;
  bool reversed = false;
  CoefficientForm form = CoefficientForm::printed;
  std::string str() const;  // "sign:order:form", e.g. "-1:given:consistent"
  friend bool operator==(const ConventionCandidate&, const ConventionCandidate&) = default;
};
ConventionCandidate parse_convention(const std::string& text);
std::vector<ConventionCandidate> all_conventions();

struct ConventionReport {
  struct Row {
    std::string preset;
    ConventionCandidate candidate;
    std::size_t matched = 0;
    std::size_t total = 0;
    bool matches_all() const { return matched == total; }
  };
  std::vector<Row> rows;
  /// Every P on the grid was an eigenvector.
  bool eigenvectors_ok = true;
  /// Candidates matching on the whole grid for every preset.
  std::vector<ConventionCandidate> universal;
};

/// For each model, every partition with at most maxweight and N parts is
/// built, verified as an eigenvector, and its recovered eigenvalue compared
/// with Ẽ under each candidate.
ConventionReport convention_harness(const std::vector<ModelSpec>& models, int maxweight);

/// The five presets at the given N with parameters a, b and κ.
std::vector<ModelSpec> preset_models(std::size_t N, const Rat& kappa, const Rat& a,
                                     const Rat& b);

}  // namespace cspoly

#endif
