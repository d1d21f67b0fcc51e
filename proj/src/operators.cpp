#include "cspoly/operators.hpp"

#include "cspoly/errors.hpp"
#include "cspoly/genfunc.hpp"

namespace cspoly {

std::string preset_name(Preset p) {
  switch (p) {
    case Preset::hermite: return "hermite";
    case Preset::laguerre: return "laguerre";
    case Preset::jacobi: return "jacobi";
    case Preset::bessel: return "bessel";
    case Preset::sutherland: return "sutherland";
    case Preset::custom: return "custom";
  }
  return "custom";
}

Preset parse_preset(const std::string& name) {
  if (name == "hermite" || name == "calogero") return Preset::hermite;
  if (name == "laguerre") return Preset::laguerre;
  if (name == "jacobi") return Preset::jacobi;
  if (name == "bessel") return Preset::bessel;
  if (name == "sutherland") return Preset::sutherland;
  if (name == "custom") return Preset::custom;
  throw InputError("unknown preset '" + name + "'");
}

std::string form_name(CoefficientForm f) {
  return f == CoefficientForm::printed ? "printed" : "consistent";
}

CoefficientForm parse_form(const std::string& name) {
  if (name == "printed") return CoefficientForm::printed;
  if (name == "consistent") return CoefficientForm::consistent;
  throw InputError("unknown coefficient form '" + name + "'");
}

int ModelSpec::alpha_degree() const {
  if (!alpha2.is_zero()) return 2;
  if (!alpha1.is_zero()) return 1;
  return 0;
}

const Rat& ModelSpec::alpha(int p) const {
  switch (p) {
    case 0: return alpha0;
    case 1: return alpha1;
    case 2: return alpha2;
  }
  throw InputError("alpha index out of range");
}

namespace {

const Rat& require(const std::optional<Rat>& v, const char* what) {
  if (!v) throw InputError(std::string("preset needs parameter ") + what);
  return *v;
}

void validate(const ModelSpec& m) {
  if (m.N < 1) throw InputError("N must be at least 1");
  if (m.alpha2.is_zero() && m.alpha1.is_zero() && m.alpha0.is_zero()) {
    throw InputError("alpha must not vanish identically");
  }
}

}  // namespace

ModelSpec make_preset(Preset p, std::size_t N, const Rat& kappa, const std::optional<Rat>& a,
                      const std::optional<Rat>& b) {
  ModelSpec m;
  m.N = N;
  m.kappa = kappa;
  m.preset = p;
  switch (p) {
    case Preset::hermite:
      m.alpha0 = 1;
      m.beta1 = -2;
      m.psi0 = "exp(-x^2/2)";
      m.z_of_x = "x";
      break;
    case Preset::laguerre:
      m.a = require(a, "a");
      m.alpha1 = 1;
      m.beta1 = -1;
      m.beta0 = *m.a + Rat(1);
      m.psi0 = "x^a exp(-x^2/2)";
      m.z_of_x = "x^2";
      break;
    case Preset::jacobi:
      m.a = require(a, "a");
      m.b = require(b, "b");
      m.alpha2 = -1;
      m.alpha0 = 1;
      m.beta1 = -(*m.a + *m.b + Rat(2));
      m.beta0 = *m.b - *m.a;
      m.psi0 = "sin^(a+1/2)(x/2) cos^(b+1/2)(x/2)";
      m.z_of_x = "cos(x)";
      break;
    case Preset::bessel:
      m.a = require(a, "a");
      m.b = require(b, "b");
      m.alpha2 = 1;
      m.beta1 = Rat(1) - Rat(2) * *m.a;
      m.beta0 = Rat(2) * *m.b;
      m.psi0 = "exp(-b e^(-x) - a x)";
      m.z_of_x = "e^x";
      break;
    case Preset::sutherland:
      m.alpha2 = -1;
      m.beta1 = -1;
      break;
    case Preset::custom:
      throw InputError("use make_custom for custom models");
  }
  validate(m);
  return m;
}

ModelSpec make_custom(std::size_t N, const Rat& kappa, const std::vector<Rat>& alpha,
                      const std::vector<Rat>& beta) {
  if (alpha.size() != 3) throw InputError("alpha needs three coefficients (a2,a1,a0)");
  if (beta.size() != 2) throw InputError("beta needs two coefficients (b1,b0)");
  ModelSpec m;
  m.N = N;
  m.kappa = kappa;
  m.alpha2 = alpha[0];
  m.alpha1 = alpha[1];
  m.alpha0 = alpha[2];
  m.beta1 = beta[0];
  m.beta0 = beta[1];
  m.preset = Preset::custom;
  validate(m);
  return m;
}

Polynomial apply_operator(const ModelSpec& model, const Polynomial& p, int sign) {
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  const std::size_t N = p.nvars();
  if (N != model.N) throw InputError("polynomial has the wrong number of variables");
  Polynomial out(N);
  std::vector<Polynomial> alpha_d(N);
  for (std::size_t j = 0; j < N; ++j) {
    const Polynomial d1 = p.derivative(j);
    out += d1.derivative(j).times_quadratic(j, model.alpha2, model.alpha1, model.alpha0);
    out += d1.times_quadratic(j, Rat(0), model.beta1, model.beta0);
    alpha_d[j] = d1.times_quadratic(j, model.alpha2, model.alpha1, model.alpha0);
  }
  const Rat two_kappa = Rat(2) * model.kappa;
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = j + 1; k < N; ++k) {
      out += (alpha_d[j] - alpha_d[k]).divide_by_difference(j, k) * two_kappa;
    }
  }
  return out * Rat(sign);
}

SymPoly apply_reduced_operator(const ModelSpec& model, const SymPoly& P, int sign) {
  if (P.nvars() != model.N) throw InputError("polynomial has the wrong number of variables");
  return SymPoly::from_polynomial(apply_operator(model, P.expand(), sign));
}

Rat eigenvalue_calogero(const IntVec& n) { return Rat(2 * n.weight()); }

Rat ground_energy(std::size_t N, const Rat& kappa) {
  if (N < 1) throw InputError("N must be at least 1");
  const Rat n(static_cast<long>(N));
  return n * (Rat(1) + kappa * (n - Rat(1)));
}

Rat eigenvalue_general(const ModelSpec& model, const IntVec& n, CoefficientForm form) {
  if (n.size() != model.N) throw InputError("index length does not match N");
  const long N = static_cast<long>(model.N);
  const Rat shift = form == CoefficientForm::printed ? Rat(2) * model.kappa
                                                     : Rat(2) * model.kappa * model.alpha2;
  Rat sum(0);
  for (long j = 0; j < N; ++j) {
    const Rat nj(n[j]);
    sum += model.alpha2 * nj * (nj - Rat(1)) + (model.beta1 + shift * Rat(N - 1 - j)) * nj;
  }
  return -sum;
}

Rat b_n(const ModelSpec& model, const IntVec& n, const IntVec& m, CoefficientForm form) {
  return eigenvalue_general(model, n, form) - eigenvalue_general(model, m, form);
}

Rat mass_ground_energy(const MassSpec& spec) {
  Rat total(0), sq(0);
  for (const auto& m : spec.masses) {
    total += m;
    sq += Rat(1) - spec.kappa * m * m;
  }
  return spec.kappa * total * total + sq;
}

// With V_j = −m_j X_j + κ Σ_{k≠j} m_j m_k/(X_j − X_k) and Δ = Π_{j<k}(X_j − X_k),
// every term below is multiplied through by Δ² to stay polynomial.
MassReport mass_identity_check(const MassSpec& spec) {
  const std::size_t n = spec.masses.size();
  if (n == 0) throw InputError("at least one mass is required");
  for (const auto& m : spec.masses) {
    if (m.is_zero()) throw InputError("masses must be nonzero");
  }
  const Rat& kappa = spec.kappa;
  auto X = [n](std::size_t j) { return Polynomial::variable(n, j); };

  Polynomial delta = Polynomial::constant(n, Rat(1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) delta = delta * (X(j) - X(k));
  }
  const Polynomial delta_sq = delta * delta;

  Polynomial lhs(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Rat& mj = spec.masses[j];
    Polynomial vd = X(j) * delta * (-mj);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      vd += delta.divide_by_difference(j, k) * (kappa * mj * spec.masses[k]);
    }
    const Polynomial dv = vd.derivative(j) * delta - vd * delta.derivative(j);
    lhs += (-dv - vd * vd) * (Rat(1) / mj);
    lhs += X(j) * X(j) * delta_sq * mj;
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const Rat& mj = spec.masses[j];
      const Rat& mk = spec.masses[k];
      const Polynomial q = delta.divide_by_difference(j, k);
      lhs += q * q * (kappa * (kappa * mj * mk - Rat(1)) * (mj + mk));
    }
  }
  MassReport report;
  report.E0 = mass_ground_energy(spec);
  report.residual = lhs - delta_sq * report.E0;
  report.holds = report.residual.is_zero();
  return report;
}

Rat corollary_constant(std::size_t N, const Rat& kappa) {
  return Rat(2 * static_cast<long>(N)) * (Rat(1) - kappa);
}

CorollaryReport corollary_check(std::size_t N, const Rat& kappa) {
  if (N < 1) throw InputError("N must be at least 1");
  MassSpec spec;
  spec.kappa = kappa;
  spec.masses.assign(N, Rat(1));
  spec.masses.insert(spec.masses.end(), N, Rat(-1));
  CorollaryReport report;
  report.C = corollary_constant(N, kappa);
  report.split = mass_identity_check(spec);
  report.holds = report.split.holds && report.split.E0 == report.C;
  return report;
}

LemmaReport lemma_action_check(const IntVec& n, std::size_t N, const Rat& kappa) {
  if (n.size() != N) throw InputError("index length does not match N");
  const ModelSpec model = calogero_model(N, kappa);
  LemmaReport report;
  report.lhs = apply_reduced_operator(model, f_vector(n, kappa), -1);

  SymPoly rhs = f_vector(n, kappa) * eigenvalue_calogero(n);
  const auto plus = shifted_plus(n, kappa);
  for (std::size_t j = 0; j < N; ++j) {
    IntVec m = n;
    m[j] -= 2;
    rhs -= f_vector(m, kappa) * ((plus[j] - Rat(1)) * (plus[j] - Rat(2)));
  }
  const Rat pair = Rat(2) * kappa * (kappa - Rat(1));
  const auto suffix = n.suffix_sums();
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = j + 1; k < N; ++k) {
      // f_m vanishes unless S_k(m) = S_k(n) − (1 + ν) >= 0.
      for (long nu = 1; nu <= suffix[k] - 1; ++nu) {
        IntVec m = n;
        m[j] -= static_cast<int>(1 - nu);
        m[k] -= static_cast<int>(1 + nu);
        rhs += f_vector(m, kappa) * (pair * Rat(nu));
      }
    }
  }
  report.residual = report.lhs - rhs;
  report.holds = report.residual.is_zero();
  return report;
}

}  // namespace cspoly
