#ifndef CSPOLY_OPERATORS_HPP
#define CSPOLY_OPERATORS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cspoly/intvec.hpp"
#include "cspoly/polynomial.hpp"
#include "cspoly/rat.hpp"
#include "cspoly/sympoly.hpp"

namespace cspoly {

enum class Preset { hermite, laguerre, jacobi, bessel, sutherland, custom };

std::string preset_name(Preset p);
/// Accepts the preset names plus "calogero" as an alias of hermite.
Preset parse_preset(const std::string& name);

/// N interacting variables with the operator
///   Σ α(z_j)∂_j² + Σ β(z_j)∂_j + 2κ Σ_{j<k} (α(z_j)∂_j − α(z_k)∂_k)/(z_j − z_k),
/// α(z) = α₂z² + α₁z + α₀, β(z) = β₁z + β₀.
struct ModelSpec {
  std::size_t N = 1;
  Rat kappa;
  Rat alpha2, alpha1, alpha0;
  Rat beta1, beta0;
  Preset preset = Preset::custom;
  std::optional<Rat> a, b;
  // Documentation only; never evaluated.
  std::string psi0;
  std::string z_of_x;

  int alpha_degree() const;
  const Rat& alpha(int p) const;  // α_p for p in {0, 1, 2}
};

/// Table presets. `a` and `b` are required where the preset uses them
/// (laguerre: a; jacobi, bessel: a and b) and ignored otherwise.
ModelSpec make_preset(Preset p, std::size_t N, const Rat& kappa,
                      const std::optional<Rat>& a = std::nullopt,
                      const std::optional<Rat>& b = std::nullopt);
/// Throws InputError if N < 1 or α is identically zero.
ModelSpec make_custom(std::size_t N, const Rat& kappa, const std::vector<Rat>& alpha,
                      const std::vector<Rat>& beta);
/// The Calogero model: hermite preset, applied with sign −1.
inline ModelSpec calogero_model(std::size_t N, const Rat& kappa) {
  return make_preset(Preset::hermite, N, kappa);
}

Polynomial apply_operator(const ModelSpec& model, const Polynomial& p, int sign);
/// sign · D applied to P. Throws InvariantViolation if an interaction
/// quotient leaves a remainder.
SymPoly apply_reduced_operator(const ModelSpec& model, const SymPoly& P, int sign);

/// 2|n|.
Rat eigenvalue_calogero(const IntVec& n);
/// N(1 + κ(N − 1)).
Rat ground_energy(std::size_t N, const Rat& kappa);

/// `printed` transcribes the eigenvalue and diagonal move coefficient
/// exactly as stated; `consistent` uses the forms that the operator
/// actually produces (they differ when α₂ ∉ {0, 1} or α₁ ≠ 0).
enum class CoefficientForm { printed, consistent };
std::string form_name(CoefficientForm f);
CoefficientForm parse_form(const std::string& name);

/// Ẽ_n = −Σ_j (α₂ n_j(n_j − 1) + (β₁ + c·2κ(N − j)) n_j), c = 1 (printed)
/// or α₂ (consistent).
Rat eigenvalue_general(const ModelSpec& model, const IntVec& n,
                       CoefficientForm form = CoefficientForm::printed);
/// Ẽ_n − Ẽ_m.
Rat b_n(const ModelSpec& model, const IntVec& n, const IntVec& m,
        CoefficientForm form = CoefficientForm::printed);

struct MassSpec {
  std::vector<Rat> masses;
  Rat kappa;
};

struct MassReport {
  Rat E0;
  bool holds = false;
  /// LHS − E0, both multiplied by Π_{j<k}(X_j − X_k)².
  Polynomial residual;
};

/// κ(Σ m_j)² + Σ (1 − κ m_j²).
Rat mass_ground_energy(const MassSpec& spec);
/// Verifies that the product ground state is an eigenfunction of the
/// mixed-mass Hamiltonian with eigenvalue mass_ground_energy.
MassReport mass_identity_check(const MassSpec& spec);

/// 2N(1 − κ).
Rat corollary_constant(std::size_t N, const Rat& kappa);

struct CorollaryReport {
  Rat C;
  MassReport split;  // masses (1,…,1,−1,…,−1)
  bool holds = false;
};
CorollaryReport corollary_check(std::size_t N, const Rat& kappa);

struct LemmaReport {
  bool holds = false;
  SymPoly lhs;
  SymPoly residual;
};

/// Compares H̃ f_n with 2|n| f_n − Σ_j (n⁺_j − 1)(n⁺_j − 2) f_{n−2e_j}
/// + 2κ(κ − 1) Σ_{j<k} Σ_{ν≥1} ν f_{n−(1−ν)e_j−(1+ν)e_k}.
LemmaReport lemma_action_check(const IntVec& n, std::size_t N, const Rat& kappa);

}  // namespace cspoly

#endif
