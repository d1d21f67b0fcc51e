#include "cspoly/eigen.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "cspoly/parallel.hpp"

namespace cspoly {

namespace {

std::string resonance_message(const IntVec& n, const IntVec& m, const Rat& b) {
  return "resonance: b_n(m) = " + b.str() + " for n = " + n.str() + ", m = " + m.str();
}

bool suffix_nonnegative(const IntVec& v) {
  long acc = 0;
  for (std::size_t i = v.size(); i-- > 0;) {
    acc += v[i];
    if (acc < 0) return false;
  }
  return true;
}

}  // namespace

ResonanceError::ResonanceError(IntVec n, IntVec m, Rat b)
    : Error(resonance_message(n, m, b)), n_(std::move(n)), m_(std::move(m)), b_(std::move(b)) {}

IntVec Move::displacement(std::size_t N) const {
  IntVec e = IntVec::zero(N);
  e[j] += 1 - nu;
  e[k] += 1 - p + nu;
  return e;
}

IntVec Move::calogero_displacement(std::size_t N) const {
  IntVec e = IntVec::zero(N);
  e[j] += 1 - nu;
  e[k] += 1 + nu;
  return e;
}

Rat g_move_coeff_calogero(const Move& move, const IntVec& m, const Rat& kappa) {
  if (move.p != 0) throw InputError("Calogero moves have p = 0");
  if (move.j != move.k) return Rat(2) * kappa * (kappa - Rat(1)) * Rat(move.nu);
  if (move.nu != 0) return Rat(0);
  const Rat plus = shifted_plus(m, kappa)[move.j];
  return -(plus * (plus + Rat(1)));
}

Rat g_move_coeff_general(const Move& move, const IntVec& m, const ModelSpec& model,
                         CoefficientForm form) {
  if (move.p < 0 || move.p > 2) throw InputError("move p must be 0, 1 or 2");
  const Rat& kappa = model.kappa;
  if (move.j != move.k) {
    return kappa * (kappa - Rat(1)) * model.alpha(move.p) * Rat(2 * move.nu - move.p);
  }
  if (move.nu != 1) return Rat(0);
  const Rat plus = shifted_plus(m, kappa)[move.j];
  if (move.p == 0) return -(plus * model.alpha0 * (plus + Rat(1)));
  if (move.p == 1) {
    if (form == CoefficientForm::printed) {
      return -(plus * (model.alpha1 * (plus + kappa + Rat(1)) - model.beta0));
    }
    return -(plus * (model.alpha1 * (plus - kappa) + model.beta0));
  }
  return Rat(0);
}

std::vector<MoveStep> moves_down(const IntVec& upper, const ModelSpec& model, Scheme scheme,
                                 CoefficientForm form) {
  const std::size_t N = upper.size();
  if (N != model.N) throw InputError("index length does not match N");
  const auto S = upper.suffix_sums();
  std::vector<MoveStep> out;
  auto push = [&](const Move& mv, const IntVec& e) {
    IntVec lower = upper - e;
    if (!suffix_nonnegative(lower)) return;
    const Rat g = scheme == Scheme::calogero
                      ? g_move_coeff_calogero(mv, lower, model.kappa)
                      : g_move_coeff_general(mv, lower, model, form);
    if (!g.is_zero()) out.push_back({mv, std::move(lower), g});
  };
  for (std::size_t j = 0; j < N; ++j) {
    if (scheme == Scheme::calogero) {
      Move mv{j, j, 0, 0};
      push(mv, mv.calogero_displacement(N));
    } else {
      for (int p = 0; p <= 1; ++p) {
        Move mv{j, j, p, 1};
        push(mv, mv.displacement(N));
      }
    }
    for (std::size_t k = j + 1; k < N; ++k) {
      long min_suffix = S[j + 1];
      for (std::size_t l = j + 1; l <= k; ++l) min_suffix = std::min(min_suffix, S[l]);
      if (scheme == Scheme::calogero) {
        for (long nu = 1; nu <= min_suffix - 1; ++nu) {
          Move mv{j, k, 0, static_cast<int>(nu)};
          push(mv, mv.calogero_displacement(N));
        }
      } else {
        for (int p = 0; p <= 2; ++p) {
          for (long nu = 1; nu <= min_suffix - 1 + p; ++nu) {
            Move mv{j, k, p, static_cast<int>(nu)};
            push(mv, mv.displacement(N));
          }
        }
      }
    }
  }
  return out;
}

namespace {

using Divisor = std::function<Rat(const IntVec&)>;

// Collects every index reachable from n through nonzero moves, then solves
// b(m) u(m) = Σ g u(upper) in decreasing suffix order.
CoeffTable solve_recursion(const IntVec& n, const ModelSpec& model, Scheme scheme,
                           CoefficientForm form, const Divisor& divisor) {
  std::map<IntVec, std::vector<std::pair<IntVec, Rat>>> incoming;
  std::set<IntVec> seen{n};
  std::deque<IntVec> queue{n};
  while (!queue.empty()) {
    const IntVec q = queue.front();
    queue.pop_front();
    for (auto& step : moves_down(q, model, scheme, form)) {
      incoming[step.lower].emplace_back(q, step.coeff);
      if (seen.insert(step.lower).second) queue.push_back(step.lower);
    }
  }
  std::vector<IntVec> order(seen.begin(), seen.end());
  std::sort(order.begin(), order.end(),
            [](const IntVec& a, const IntVec& b) { return suffix_extension_less(b, a); });

  std::map<IntVec, Rat> u{{n, Rat(1)}};
  for (const auto& m : order) {
    if (m == n) continue;
    Rat sum(0);
    for (const auto& [upper, g] : incoming[m]) {
      if (auto it = u.find(upper); it != u.end()) sum += g * it->second;
    }
    const Rat b = divisor(m);
    if (b.is_zero()) throw ResonanceError(n, m, b);
    sum /= b;
    if (!sum.is_zero()) u.emplace(m, std::move(sum));
  }
  return CoeffTable{n, std::move(u)};
}

}  // namespace

CoeffTable u_coeffs_calogero(const IntVec& n, std::size_t N, const Rat& kappa) {
  if (n.size() != N) throw InputError("index length does not match N");
  const ModelSpec model = calogero_model(N, kappa);
  const long w = n.weight();
  return solve_recursion(n, model, Scheme::calogero, CoefficientForm::consistent,
                         [w](const IntVec& m) { return Rat(2 * (w - m.weight())); });
}

CoeffTable u_coeffs_calogero_closed(const IntVec& n, std::size_t N, const Rat& kappa) {
  if (n.size() != N) throw InputError("index length does not match N");
  const ModelSpec model = calogero_model(N, kappa);
  std::map<IntVec, Rat> acc;
  std::function<void(const IntVec&, int, const Rat&)> walk = [&](const IntVec& q, int s,
                                                                  const Rat& prod) {
    for (const auto& step : moves_down(q, model, Scheme::calogero)) {
      const Rat w = prod * step.coeff;
      Rat denom = Rat(4).pow(static_cast<unsigned>(s + 1));
      for (int r = 2; r <= s + 1; ++r) denom *= Rat(r);
      acc[step.lower] += w / denom;
      walk(step.lower, s + 1, w);
    }
  };
  walk(n, 0, Rat(1));
  CoeffTable t{n, {{n, Rat(1)}}};
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) t.entries.emplace(m, c);
  }
  return t;
}

CoeffTable u_coeffs_general(const ModelSpec& model, const IntVec& n, CoefficientForm form) {
  return solve_recursion(n, model, Scheme::general, form,
                         [&](const IntVec& m) { return b_n(model, n, m, form); });
}

CoeffTable u_coeffs_general_closed(const ModelSpec& model, const IntVec& n,
                                   CoefficientForm form) {
  std::map<IntVec, Rat> acc;
  std::function<void(const IntVec&, const Rat&)> walk = [&](const IntVec& q, const Rat& prod) {
    for (const auto& step : moves_down(q, model, Scheme::general, form)) {
      const Rat b = b_n(model, n, step.lower, form);
      if (b.is_zero()) throw ResonanceError(n, step.lower, b);
      const Rat w = prod * step.coeff / b;
      acc[step.lower] += w;
      walk(step.lower, w);
    }
  };
  walk(n, Rat(1));
  CoeffTable t{n, {{n, Rat(1)}}};
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) t.entries.emplace(m, c);
  }
  return t;
}

EigenResult assemble_P(const IntVec& n, const CoeffTable& table, const Rat& kappa,
                       const std::optional<Rat>& eigenvalue) {
  if (table.root != n) throw InputError("table root does not match the index");
  EigenResult r;
  r.index = n;
  r.eigenvalue = eigenvalue ? *eigenvalue : eigenvalue_calogero(n);
  for (const auto& [m, c] : table.entries) {
    if (!c.is_zero()) r.f_expansion.emplace(m, c);
  }
  r.poly = expand_f(r.f_expansion, n.size(), kappa);
  return r;
}

Rat model_eigenvalue(const ModelSpec& model, const IntVec& n, CoefficientForm form) {
  if (model.preset == Preset::hermite) return eigenvalue_calogero(n);
  return eigenvalue_general(model, n, form);
}

EigenResult eigenfunction(const ModelSpec& model, const IntVec& n, CoefficientForm form) {
  if (n.size() != model.N) throw InputError("index length does not match N");
  const CoeffTable t = model.preset == Preset::hermite
                           ? u_coeffs_calogero(n, model.N, model.kappa)
                           : u_coeffs_general(model, n, form);
  return assemble_P(n, t, model.kappa, model_eigenvalue(model, n, form));
}

std::optional<Rat> eigenvalue_of(const ModelSpec& model, const SymPoly& p, int sign) {
  if (p.is_zero()) return std::nullopt;
  const SymPoly image = apply_reduced_operator(model, p, sign);
  const auto& [lam, c] = *p.terms().begin();
  const Rat e = image.coeff(lam) / c;
  if (image != p * e) return std::nullopt;
  return e;
}

EigenCheck oracle_eigen_check(const ModelSpec& model, const EigenResult& result, int sign) {
  EigenCheck check;
  check.recovered_eigenvalue = eigenvalue_of(model, result.poly, sign);
  check.is_eigenvector = check.recovered_eigenvalue.has_value();
  check.matches_formula = check.is_eigenvector && *check.recovered_eigenvalue == result.eigenvalue;
  return check;
}

TriangularSolution monomial_triangular_solve(const ModelSpec& model, const Partition& lam,
                                             const Rat& target_eigenvalue, int sign) {
  if (lam.size() != model.N) throw InputError("partition length does not match N");
  TriangularSolution sol;
  for (const auto& mu : partitions_up_to(lam.weight(), model.N)) {
    if (dominance_leq(mu.vec(), lam.vec())) sol.basis.push_back(mu);
  }
  std::sort(sol.basis.begin(), sol.basis.end(), [](const Partition& a, const Partition& b) {
    return a.vec().prefix_sums() > b.vec().prefix_sums();
  });
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < sol.basis.size(); ++i) index.emplace(sol.basis[i], i);

  const std::size_t size = sol.basis.size();
  RatMatrix a(size, size);
  for (std::size_t col = 0; col < size; ++col) {
    const SymPoly image = apply_reduced_operator(model, SymPoly::monomial(sol.basis[col]), sign);
    for (const auto& [mu, c] : image.terms()) {
      auto it = index.find(mu);
      if (it == index.end()) {
        throw InvariantViolation("operator leaves the dominance span at " + mu.str());
      }
      if (it->second < col) throw InvariantViolation("operator matrix is not triangular");
      a(it->second, col) = c;
    }
  }
  if (a(0, 0) != target_eigenvalue) {
    throw InputError("target eigenvalue " + target_eigenvalue.str() +
                     " differs from the diagonal entry " + a(0, 0).str());
  }
  std::vector<Rat> c(size);
  c[0] = Rat(1);
  for (std::size_t i = 1; i < size; ++i) {
    Rat rhs(0);
    for (std::size_t j = 0; j < i; ++j) rhs += a(i, j) * c[j];
    const Rat d = target_eigenvalue - a(i, i);
    if (d.is_zero()) {
      if (!rhs.is_zero()) {
        sol.blocking = sol.basis[i];
        return sol;
      }
      sol.free_directions.push_back(sol.basis[i]);
      continue;
    }
    c[i] = rhs / d;
  }
  SymPoly p(model.N);
  for (std::size_t i = 0; i < size; ++i) p.add_term(sol.basis[i], c[i]);
  sol.poly = std::move(p);
  return sol;
}

CompletenessReport completeness_check(const ModelSpec& model, int maxweight,
                                      CoefficientForm form) {
  CompletenessReport rep;
  rep.labels = partitions_up_to(maxweight, model.N);
  std::stable_sort(rep.labels.begin(), rep.labels.end(), [](const auto& a, const auto& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return suffix_extension_less(a.vec(), b.vec());
  });
  const std::size_t size = rep.labels.size();
  std::vector<EigenResult> results(size);
  parallel_for(size, [&](std::size_t i) {
    results[i] = eigenfunction(model, rep.labels[i].vec(), form);
  });
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < size; ++i) index.emplace(rep.labels[i], i);

  rep.p_to_m = RatMatrix(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (const auto& [mu, c] : results[i].poly.terms()) {
      auto it = index.find(mu);
      if (it == index.end()) throw InvariantViolation("P has a term above the weight cap");
      rep.p_to_m(i, it->second) = c;
    }
  }
  rep.rank = rep.p_to_m.rank();
  rep.determinant = rep.p_to_m.determinant();
  rep.invertible = !rep.determinant.is_zero();

  rep.g_unitriangular = true;
  for (std::size_t i = 0; i < size && rep.g_unitriangular; ++i) {
    GExpansion g;
    for (const auto& [m, c] : results[i].f_expansion) {
      for (const auto& [mu, d] : f_in_g_basis(m, model.kappa)) g[mu] += c * d;
    }
    const Partition& lam = rep.labels[i];
    for (const auto& [mu, c] : g) {
      if (c.is_zero()) continue;
      if (mu == lam) {
        rep.g_unitriangular = rep.g_unitriangular && c == Rat(1);
      } else if (!suffix_leq(mu.vec(), lam.vec()) || !index.count(mu)) {
        rep.g_unitriangular = false;
      }
    }
    if (!g.count(lam) || g.at(lam) != Rat(1)) rep.g_unitriangular = false;
  }
  return rep;
}

ActionReport general_action_check(const ModelSpec& model, const IntVec& n,
                                  CoefficientForm form) {
  const Rat& kappa = model.kappa;
  const SymPoly fn = f_vector(n, kappa);
  SymPoly rhs = fn * eigenvalue_general(model, n, form);
  for (const auto& step : moves_down(n, model, Scheme::general, form)) {
    rhs += f_vector(step.lower, kappa) * step.coeff;
  }
  ActionReport rep;
  rep.residual = apply_reduced_operator(model, fn, -1) - rhs;
  rep.holds = rep.residual.is_zero();
  return rep;
}

std::string ConventionCandidate::str() const {
  return std::string(sign < 0 ? "-1" : "+1") + ":" + (reversed ? "reversed" : "given") + ":" +
         form_name(form);
}

ConventionCandidate parse_convention(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw InputError("convention must be sign:order:form");
  ConventionCandidate c;
  if (parts[0] == "-1" || parts[0] == "-") {
    c.sign = -1;
  } else if (parts[0] == "+1" || parts[0] == "1" || parts[0] == "+") {
    c.sign = 1;
  } else {
    throw InputError("convention sign must be +1 or -1");
  }
  if (parts[1] == "given") {
    c.reversed = false;
  } else if (parts[1] == "reversed") {
    c.reversed = true;
  } else {
    throw InputError("convention order must be given or reversed");
  }
  c.form = parse_form(parts[2]);
  return c;
}

std::vector<ConventionCandidate> all_conventions() {
  std::vector<ConventionCandidate> out;
  for (int sign : {-1, 1}) {
    for (bool rev : {false, true}) {
      for (auto form : {CoefficientForm::printed, CoefficientForm::consistent}) {
        out.push_back({sign, rev, form});
      }
    }
  }
  return out;
}

ConventionReport convention_harness(const std::vector<ModelSpec>& models, int maxweight) {
  ConventionReport rep;
  const auto candidates = all_conventions();
  std::vector<std::string> presets;
  std::map<std::pair<std::string, std::size_t>, ConventionReport::Row> rows;
  for (const auto& model : models) {
    const std::string name = preset_name(model.preset);
    if (std::find(presets.begin(), presets.end(), name) == presets.end()) presets.push_back(name);
    for (const auto& lam : partitions_up_to(maxweight, model.N)) {
      const EigenResult r = eigenfunction(model, lam.vec());
      const auto e = eigenvalue_of(model, r.poly, 1);
      if (!e) rep.eigenvectors_ok = false;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        const auto& cand = candidates[c];
        auto& row = rows[{name, c}];
        row.preset = name;
        row.candidate = cand;
        ++row.total;
        const IntVec idx = cand.reversed ? lam.vec().reversed() : lam.vec();
        if (e && Rat(cand.sign) * *e == eigenvalue_general(model, idx, cand.form)) ++row.matched;
      }
    }
  }
  for (const auto& name : presets) {
    for (std::size_t c = 0; c < candidates.size(); ++c) rep.rows.push_back(rows[{name, c}]);
  }
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    bool all = !presets.empty();
    for (const auto& name : presets) all = all && rows[{name, c}].matches_all();
    if (all) rep.universal.push_back(candidates[c]);
  }
  return rep;
}

std::vector<ModelSpec> preset_models(std::size_t N, const Rat& kappa, const Rat& a,
                                     const Rat& b) {
  std::vector<ModelSpec> out;
  for (auto p : {Preset::hermite, Preset::laguerre, Preset::jacobi, Preset::bessel,
                 Preset::sutherland}) {
    out.push_back(make_preset(p, N, kappa, a, b));
  }
  return out;
}

}  // namespace cspoly
