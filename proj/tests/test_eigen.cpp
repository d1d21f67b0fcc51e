#include <gtest/gtest.h>

#include "cspoly/errors.hpp"
#include "cspoly/eigen.hpp"
#include "cspoly/genfunc.hpp"

using namespace cspoly;

namespace {

const std::vector<Rat> kKappas = {Rat(1, 3), Rat(1, 2), Rat(1), Rat(2)};

SymPoly m(std::initializer_list<int> lam, const Rat& c = Rat(1)) {
  return SymPoly::monomial(Partition(lam), c);
}

std::vector<IntVec> box(std::size_t N, int lo, int hi) {
  std::vector<IntVec> out;
  std::vector<int> v(N, lo);
  while (true) {
    out.emplace_back(v);
    std::size_t i = 0;
    while (i < N && v[i] == hi) v[i++] = lo;
    if (i == N) break;
    ++v[i];
  }
  return out;
}

std::vector<IntVec> calogero_grid(std::size_t N) {
  std::vector<IntVec> out;
  for (const auto& n : box(N, 0, 4))
    if (n.weight() <= 6) out.push_back(n);
  return out;
}

std::vector<ModelSpec> presets(std::size_t N, const Rat& kappa) {
  return preset_models(N, kappa, Rat(1, 3), Rat(2, 5));
}

using Coeffs = std::vector<Rat>;  // dense, index = degree

Coeffs hermite_h(int n) {
  Coeffs prev{Rat(1)}, cur{Rat(0), Rat(2)};
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    Coeffs next(k + 2, Rat(0));
    for (int d = 0; d <= k; ++d) next[d + 1] += Rat(2) * cur[d];
    for (int d = 0; d < k; ++d) next[d] -= Rat(2 * k) * prev[d];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// (k + 1) L_{k+1} = (2k + a + 1 − x) L_k − (k + a) L_{k−1}.
Coeffs laguerre_l(int n, const Rat& a) {
  Coeffs prev{Rat(1)}, cur{a + Rat(1), Rat(-1)};
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    Coeffs next(k + 2, Rat(0));
    for (int d = 0; d <= k; ++d) {
      next[d] += (Rat(2 * k + 1) + a) * cur[d];
      next[d + 1] -= cur[d];
    }
    for (int d = 0; d < k; ++d) next[d] -= (Rat(k) + a) * prev[d];
    for (auto& c : next) c /= Rat(k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rat entry(const CoeffTable& t, const IntVec& m) {
  const auto it = t.entries.find(m);
  return it == t.entries.end() ? Rat(0) : it->second;
}

bool proportional(const SymPoly& p, const Coeffs& q) {
  const int n = static_cast<int>(q.size()) - 1;
  const Rat lead = p.coeff(Partition({n}));
  if (lead.is_zero() || p.degree() != n) return false;
  for (int d = 0; d <= n; ++d)
    if (p.coeff(Partition({d})) * q[n] != q[d] * lead) return false;
  return true;
}

}  // namespace

TEST(MoveCoefficients, Calogero) {
  for (const auto& k : kKappas) {
    EXPECT_EQ(g_move_coeff_calogero({0, 0, 0, 0}, {0}, k), -k * (k + Rat(1)));
    EXPECT_EQ(g_move_coeff_calogero({0, 1, 0, 0}, {1, 0}, k), Rat(0));
    EXPECT_EQ(g_move_coeff_calogero({0, 1, 0, 2}, {1, 0}, k), Rat(4) * k * (k - Rat(1)));
  }
}

TEST(MoveCoefficients, General) {
  const auto jac = make_preset(Preset::jacobi, 2, Rat(1, 2), Rat(1, 3), Rat(2, 5));
  EXPECT_EQ(g_move_coeff_general({0, 1, 2, 1}, {1, 0}, jac), Rat(0));
  EXPECT_EQ(g_move_coeff_general({0, 0, 2, 1}, {1, 0}, jac), Rat(0));
  for (const auto& k : kKappas) {
    const auto herm = calogero_model(1, k);
    EXPECT_EQ(g_move_coeff_general({0, 0, 0, 1}, {0}, herm), -k * (k + Rat(1)));
  }
}

TEST(Moves, StrictlyDecreaseInSuffixOrder) {
  for (std::size_t N = 1; N <= 3; ++N)
    for (const auto& model : presets(N, Rat(1, 2)))
      for (const auto& n : box(N, -1, 3)) {
        if (!suffix_leq(IntVec::zero(N), n)) continue;
        for (auto scheme : {Scheme::calogero, Scheme::general})
          for (const auto& step : moves_down(n, model, scheme)) {
            EXPECT_TRUE(suffix_leq(step.lower, n));
            EXPECT_NE(step.lower, n);
            EXPECT_TRUE(suffix_leq(IntVec::zero(N), step.lower));
            EXPECT_FALSE(step.coeff.is_zero());
          }
      }
}

TEST(CalogeroTable, Examples) {
  for (const auto& k : kKappas) {
    EXPECT_EQ(entry(u_coeffs_calogero({2}, 1, k), {0}), -k * (k + Rat(1)) / Rat(4));
    EXPECT_EQ(entry(u_coeffs_calogero({1, 1}, 2, k), {-1, 1}), -k * (Rat(2) * k - Rat(1)) / Rat(2));
    EXPECT_EQ(entry(u_coeffs_calogero_closed({2}, 1, k), {0}), -k * (k + Rat(1)) / Rat(4));
    for (const auto& n : std::vector<IntVec>{{0, 0}, {1, 0}, {0, 1}, {-1, 2}}) {
      const auto t = u_coeffs_calogero(n, 2, k);
      EXPECT_EQ(t.entries.size(), 1u);
      EXPECT_EQ(t.entries.at(n), Rat(1));
    }
  }
}

TEST(CalogeroTable, RecursionEqualsClosedForm) {
  for (const auto& k : {Rat(1, 2), Rat(1), Rat(2)})
    for (std::size_t N = 1; N <= 2; ++N)
      for (const auto& n : calogero_grid(N))
        EXPECT_EQ(u_coeffs_calogero(n, N, k), u_coeffs_calogero_closed(n, N, k)) << n;
}

TEST(CalogeroTable, SupportBound) {
  for (const auto& k : {Rat(1, 2), Rat(2)})
    for (std::size_t N = 1; N <= 3; ++N)
      for (const auto& lam : partitions_up_to(6, N)) {
        const auto t = u_coeffs_calogero(lam.vec(), N, k);
        EXPECT_EQ(t.entries.at(lam.vec()), Rat(1));
        for (const auto& [key, c] : t.entries) {
          if (key == lam.vec()) continue;
          EXPECT_TRUE(suffix_leq(key, lam.vec()));
          EXPECT_LE(key.weight(), lam.weight() - 2);
        }
      }
}

TEST(GeneralTable, HermiteMatchesCalogero) {
  for (const auto& k : {Rat(1, 2), Rat(1), Rat(2)})
    for (std::size_t N = 1; N <= 2; ++N) {
      const auto herm = calogero_model(N, k);
      for (const auto& n : calogero_grid(N)) {
        EXPECT_EQ(u_coeffs_general(herm, n), u_coeffs_calogero(n, N, k)) << n;
        EXPECT_EQ(u_coeffs_general_closed(herm, n), u_coeffs_calogero(n, N, k)) << n;
      }
    }
}

TEST(GeneralTable, RecursionEqualsClosedForm) {
  for (std::size_t N = 1; N <= 2; ++N)
    for (const auto& model : presets(N, Rat(1, 2)))
      for (const auto& lam : partitions_up_to(4, N))
        EXPECT_EQ(u_coeffs_general(model, lam.vec()), u_coeffs_general_closed(model, lam.vec()))
            << preset_name(model.preset) << lam;
}

TEST(GeneralTable, SupportBound) {
  for (std::size_t N = 1; N <= 2; ++N)
    for (const auto& model : presets(N, Rat(2, 3)))
      for (const auto& lam : partitions_up_to(4, N))
        for (const auto& [key, c] : u_coeffs_general(model, lam.vec()).entries) {
          if (key == lam.vec()) continue;
          EXPECT_TRUE(suffix_leq(key, lam.vec()));
          EXPECT_LE(key.weight(), lam.weight() + model.alpha_degree() - 2);
        }
}

TEST(GeneralTable, Resonance) {
  const auto model = make_custom(1, Rat(1), {Rat(0), Rat(0), Rat(1)}, {Rat(0), Rat(0)});
  for (int n = 2; n <= 6; ++n) {
    try {
      u_coeffs_general(model, {n});
      ADD_FAILURE() << "no resonance for n = " << n;
    } catch (const ResonanceError& e) {
      EXPECT_EQ(e.n(), IntVec{n});
      EXPECT_TRUE(e.b().is_zero());
      EXPECT_NE(std::string(e.what()).find("b_n(m) = 0"), std::string::npos);
    }
  }
  EXPECT_NO_THROW(u_coeffs_general(model, {1}));
}

TEST(Assemble, Examples) {
  for (const auto& k : kKappas) {
    const auto P2 = eigenfunction(calogero_model(1, k), {2});
    EXPECT_EQ(P2.poly, (k * (k + Rat(1)) / Rat(2)) * (m({2}) - m({0}, Rat(1, 2))));
    EXPECT_EQ(P2.eigenvalue, Rat(4));
    const auto P11 = eigenfunction(calogero_model(2, k), {1, 1});
    const Rat shift = k * k * (Rat(2) * k - Rat(1)) / Rat(2);
    EXPECT_EQ(P11.poly, f_vector({1, 1}, k) + SymPoly::constant(2, shift));
    EXPECT_EQ(eigenfunction(calogero_model(2, k), {1, 0}).poly, f_vector({1, 0}, k));
  }
}

TEST(OracleCheck, CalogeroEigenRelation) {
  for (const auto& k : kKappas)
    for (std::size_t N = 1; N <= 2; ++N)
      for (const auto& lam : partitions_up_to(5, N)) {
        const auto r = eigenfunction(calogero_model(N, k), lam.vec());
        const auto check = oracle_eigen_check(calogero_model(N, k), r);
        EXPECT_TRUE(check.is_eigenvector) << lam;
        EXPECT_TRUE(check.matches_formula) << lam;
        EXPECT_EQ(check.recovered_eigenvalue, Rat(2 * lam.weight()));
      }
}

TEST(OracleCheck, EveryPresetGivesEigenvectors) {
  for (std::size_t N = 1; N <= 2; ++N)
    for (const auto& model : presets(N, Rat(3, 2)))
      for (const auto& lam : partitions_up_to(3, N)) {
        const auto r = eigenfunction(model, lam.vec());
        const auto check = oracle_eigen_check(model, r);
        EXPECT_TRUE(check.is_eigenvector) << preset_name(model.preset) << lam;
        EXPECT_TRUE(check.matches_formula) << preset_name(model.preset) << lam;
        if (model.preset == Preset::sutherland) {
          EXPECT_TRUE(r.poly.is_homogeneous_of(lam.weight()));
        }
      }
}

TEST(OracleCheck, RejectsNonEigenvector) {
  const auto model = calogero_model(2, Rat(1, 2));
  EXPECT_FALSE(eigenvalue_of(model, m({2, 0})).has_value());
  EXPECT_EQ(eigenvalue_of(model, SymPoly::one(2)), Rat(0));
}

TEST(GeneralAction, HoldsForEveryPreset) {
  for (std::size_t N = 1; N <= 2; ++N)
    for (const auto& model : presets(N, Rat(1, 3)))
      for (const auto& n : box(N, -1, 3)) {
        const auto r = general_action_check(model, n);
        EXPECT_TRUE(r.holds) << preset_name(model.preset) << n;
      }
}

TEST(ClassicalReduction, HermiteAndLaguerre) {
  for (const auto& k : kKappas)
    for (int n = 0; n <= 6; ++n)
      EXPECT_TRUE(proportional(eigenfunction(calogero_model(1, k), {n}).poly, hermite_h(n))) << n;
  const Rat a(1, 3);
  const auto lag = make_preset(Preset::laguerre, 1, Rat(1, 2), a);
  for (int n = 0; n <= 6; ++n)
    EXPECT_TRUE(proportional(eigenfunction(lag, {n}).poly, laguerre_l(n, a))) << n;
}

TEST(TriangularSolve, Examples) {
  for (const auto& k : kKappas) {
    const auto zero = monomial_triangular_solve(calogero_model(2, k), Partition({0, 0}), Rat(0));
    ASSERT_TRUE(zero.poly.has_value());
    EXPECT_EQ(*zero.poly, SymPoly::one(2));
    const auto one = monomial_triangular_solve(calogero_model(1, k), Partition({2}), Rat(4));
    ASSERT_TRUE(one.poly.has_value());
    EXPECT_EQ(*one.poly, m({2}) - m({0}, Rat(1, 2)));
    const auto two = monomial_triangular_solve(calogero_model(2, k), Partition({2, 0}), Rat(4));
    ASSERT_TRUE(two.poly.has_value());
    EXPECT_EQ(*two.poly, m({2, 0}) - m({0, 0}, Rat(1) + k));
    EXPECT_EQ(two.free_directions, std::vector<Partition>{Partition({1, 1})});
  }
  EXPECT_THROW(monomial_triangular_solve(calogero_model(1, Rat(1)), Partition({2}), Rat(3)), InputError);
}

TEST(TriangularSolve, AgreesWithAssembledUpToDegenerateEigenspace) {
  for (const auto& k : {Rat(1, 3), Rat(2)})
    for (std::size_t N = 1; N <= 3; ++N) {
      const auto model = calogero_model(N, k);
      for (const auto& lam : partitions_up_to(4, N)) {
        const Rat E(2 * lam.weight());
        const auto sol = monomial_triangular_solve(model, lam, E);
        ASSERT_TRUE(sol.poly.has_value()) << lam;
        EXPECT_EQ(eigenvalue_of(model, *sol.poly), E);
        const auto P = eigenfunction(model, lam.vec()).poly;
        const Rat lead = P.coeff(lam);
        // f_(1,1) has no m_(1,1) term at κ = 2.
        if (lead.is_zero()) {
          EXPECT_EQ(eigenvalue_of(model, P), E) << lam;
          continue;
        }
        const auto diff = P * (Rat(1) / lead) - *sol.poly;
        EXPECT_TRUE(diff.coeff(lam).is_zero());
        if (!diff.is_zero()) {
          EXPECT_EQ(eigenvalue_of(model, diff), E) << lam;
        }
      }
    }
}

TEST(Completeness, Examples) {
  const auto tiny = completeness_check(calogero_model(2, Rat(1, 2)), 0);
  EXPECT_EQ(tiny.labels.size(), 1u);
  EXPECT_TRUE(tiny.invertible);
  for (const auto& k : {Rat(1, 3), Rat(1, 2), Rat(2)}) {
    const auto r = completeness_check(calogero_model(2, k), 5);
    EXPECT_TRUE(r.invertible);
    EXPECT_TRUE(r.g_unitriangular);
    EXPECT_EQ(r.rank, r.labels.size());
    EXPECT_EQ(r.determinant, r.p_to_m.determinant());
  }
  const auto jac = completeness_check(make_preset(Preset::jacobi, 2, Rat(1, 2), Rat(1, 3), Rat(2, 5)), 3);
  EXPECT_TRUE(jac.invertible);
}

TEST(Conventions, ParseAndList) {
  EXPECT_EQ(all_conventions().size(), 8u);
  for (const auto& c : all_conventions()) EXPECT_EQ(parse_convention(c.str()), c);
  EXPECT_EQ(parse_convention("-1:given:consistent").str(), "-1:given:consistent");
  EXPECT_THROW(parse_convention("0:given:printed"), InputError);
}

TEST(Conventions, HarnessSingleVariable) {
  const auto report = convention_harness(presets(1, Rat(1, 2)), 4);
  EXPECT_TRUE(report.eigenvectors_ok);
  ASSERT_FALSE(report.universal.empty());
  EXPECT_NE(std::find(report.universal.begin(), report.universal.end(),
                      parse_convention("-1:given:consistent")),
            report.universal.end());
}
