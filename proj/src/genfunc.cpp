#include "cspoly/genfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "cspoly/errors.hpp"
#include "cspoly/parallel.hpp"

namespace cspoly {

namespace {

std::mutex g_cache_mutex;
std::map<std::tuple<int, std::size_t, std::string>, SymPoly> g_row_cache;
std::map<std::pair<Partition, std::string>, SymPoly> g_partition_cache;

}  // namespace

void clear_g_cache() {
  std::lock_guard lock(g_cache_mutex);
  g_row_cache.clear();
  g_partition_cache.clear();
}

SymPoly g_row(int d, std::size_t N, const Rat& kappa) {
  if (d < 0) throw InputError("g_row: negative degree");
  const auto key = std::make_tuple(d, N, kappa.str());
  {
    std::lock_guard lock(g_cache_mutex);
    if (auto it = g_row_cache.find(key); it != g_row_cache.end()) return it->second;
  }
  SymPoly out(N);
  for (const auto& lam : partitions_of(d, N)) {
    Rat c(1);
    for (std::size_t i = 0; i < N; ++i) c *= gen_binomial(kappa + Rat(lam[i] - 1), lam[i]);
    out.add_term(lam, c);
  }
  std::lock_guard lock(g_cache_mutex);
  return g_row_cache.try_emplace(key, std::move(out)).first->second;
}

SymPoly g_partition(const Partition& lam, const Rat& kappa) {
  auto key = std::make_pair(lam, kappa.str());
  {
    std::lock_guard lock(g_cache_mutex);
    if (auto it = g_partition_cache.find(key); it != g_partition_cache.end()) return it->second;
  }
  SymPoly out = SymPoly::one(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] > 0) out = out * g_row(lam[i], lam.size(), kappa);
  }
  std::lock_guard lock(g_cache_mutex);
  return g_partition_cache.try_emplace(std::move(key), std::move(out)).first->second;
}

// Columns k = N-1..1 are filled in turn. When column k is reached every
// p_kl (l > k) is fixed, so μ_k = n_k + Σ_l p_kl − Σ_{i<k} p_ik >= 0 bounds
// the column sum; μ_0 is checked at the end.
GExpansion f_in_g_basis(const IntVec& n, const Rat& kappa) {
  const std::size_t N = n.size();
  GExpansion out;
  if (N == 0 || n.weight() < 0) return out;
  std::vector<Rat> binom_cache;
  auto signed_binom = [&](int p) -> const Rat& {
    while (static_cast<int>(binom_cache.size()) <= p) {
      const int q = static_cast<int>(binom_cache.size());
      Rat b = gen_binomial(kappa, q);
      binom_cache.push_back(q % 2 ? -b : b);
    }
    return binom_cache[p];
  };
  std::vector<long> mu(n.begin(), n.end());

  std::function<void(std::size_t, const Rat&)> column;
  std::function<void(std::size_t, std::size_t, long, const Rat&)> fill;

  column = [&](std::size_t k, const Rat& coeff) {
    if (k == 0) {
      if (mu[0] < 0) return;
      std::vector<int> parts(mu.begin(), mu.end());
      auto [it, inserted] = out.try_emplace(to_partition(IntVec(parts)), coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) out.erase(it);
      }
      return;
    }
    if (mu[k] < 0) return;
    fill(k, 0, mu[k], coeff);
  };

  // Chooses p_ik for i = row.., with `budget` units left in column k.
  fill = [&](std::size_t k, std::size_t row, long budget, const Rat& coeff) {
    if (row == k) {
      column(k - 1, coeff);
      return;
    }
    for (long p = 0; p <= budget; ++p) {
      const Rat& b = signed_binom(static_cast<int>(p));
      if (b.is_zero()) break;
      mu[row] += p;
      mu[k] -= p;
      fill(k, row + 1, budget - p, coeff * b);
      mu[row] -= p;
      mu[k] += p;
    }
  };

  column(N - 1, Rat(1));
  return out;
}

SymPoly expand_g(const GExpansion& e, std::size_t N, const Rat& kappa) {
  SymPoly out(N);
  for (const auto& [lam, c] : e) out += g_partition(lam, kappa) * c;
  return out;
}

SymPoly f_vector(const IntVec& n, const Rat& kappa) {
  return expand_g(f_in_g_basis(n, kappa), n.size(), kappa);
}

SymPoly expand_f(const FExpansion& e, std::size_t N, const Rat& kappa) {
  SymPoly out(N);
  for (const auto& [m, c] : e) out += f_vector(m, kappa) * c;
  return out;
}

GExpansion to_g_basis(const SymPoly& p, const Rat& kappa) {
  const std::size_t N = p.nvars();
  std::map<long, std::vector<std::pair<Partition, Rat>>> by_weight;
  for (const auto& [lam, c] : p.terms()) by_weight[lam.weight()].emplace_back(lam, c);
  GExpansion out;
  for (const auto& [w, terms] : by_weight) {
    const auto basis = partitions_of(w, N);
    RatMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const SymPoly g = g_partition(basis[j], kappa);
      for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = g.coeff(basis[i]);
    }
    std::vector<Rat> rhs(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = p.coeff(basis[i]);
    const auto sol = m.solve(rhs);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!sol[j].is_zero()) out.emplace(basis[j], sol[j]);
    }
  }
  return out;
}

GeneratingSeries::GeneratingSeries(std::size_t nx, std::size_t ny, std::vector<Factor> x_factors,
                                   std::vector<Factor> pair_factors, int max_x_degree,
                                   int max_pair_order)
    : nx_(nx), ny_(ny), max_x_degree_(max_x_degree), max_pair_order_(max_pair_order) {
  for (const auto& f : x_factors) {
    if (f.num >= nx || f.den >= ny) throw InputError("series factor out of range");
  }
  for (const auto& f : pair_factors) {
    if (f.num >= f.den || f.den >= ny) throw InputError("pair factor outside the ordered region");
  }

  // x part: the x-degree of an entry equals minus its total y exponent.
  x_part_.emplace(Key(ny, 0), Polynomial::constant(nx, Rat(1)));
  for (const auto& f : x_factors) {
    std::map<Key, Polynomial> next;
    for (const auto& [key, poly] : x_part_) {
      int deg = 0;
      for (int v : key) deg -= v;
      Polynomial power = Polynomial::constant(nx, Rat(1));
      for (int p = 0; deg + p <= max_x_degree; ++p) {
        Rat b = gen_binomial(f.exponent, p);
        if (b.is_zero()) break;
        if (p % 2) b = -b;
        Key k = key;
        k[f.den] -= p;
        auto [it, inserted] = next.try_emplace(k, nx);
        it->second += poly * power * b;
        power = power * Polynomial::variable(nx, f.num);
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    x_part_ = std::move(next);
  }

  pair_part_.emplace(Key(ny + 1, 0), Rat(1));
  for (const auto& f : pair_factors) {
    std::map<Key, Rat> next;
    for (const auto& [key, c] : pair_part_) {
      for (int p = 0; key[ny] + p <= max_pair_order; ++p) {
        Rat b = gen_binomial(f.exponent, p);
        if (b.is_zero()) break;
        if (p % 2) b = -b;
        Key k = key;
        k[f.num] += p;
        k[f.den] -= p;
        k[ny] += p;
        next[k] += c * b;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    pair_part_ = std::move(next);
  }
}

GeneratingSeries GeneratingSeries::standard(std::size_t N, const Rat& kappa, int max_x_degree,
                                            int max_pair_order) {
  std::vector<Factor> xf, pf;
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = 0; k < N; ++k) xf.push_back({j, k, -kappa});
  }
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = j + 1; k < N; ++k) pf.push_back({j, k, kappa});
  }
  return GeneratingSeries(N, N, std::move(xf), std::move(pf), max_x_degree, max_pair_order);
}

GeneratingSeries GeneratingSeries::deformed(std::size_t N, std::size_t Ntilde, const Rat& kappa,
                                            int max_x_degree, int max_pair_order) {
  if (kappa.is_zero()) throw InputError("deformed series needs kappa != 0");
  const Rat inv = Rat(1) / kappa;
  const std::size_t M = N + Ntilde;
  auto tilde = [N](std::size_t J) { return N + J; };
  std::vector<Factor> xf, pf;
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = 0; k < N; ++k) xf.push_back({j, k, -kappa});
    for (std::size_t K = 0; K < Ntilde; ++K) xf.push_back({j, tilde(K), Rat(1)});
  }
  for (std::size_t J = 0; J < Ntilde; ++J) {
    for (std::size_t K = 0; K < Ntilde; ++K) xf.push_back({tilde(J), tilde(K), -inv});
    for (std::size_t k = 0; k < N; ++k) xf.push_back({tilde(J), k, Rat(1)});
  }
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t k = j + 1; k < N; ++k) pf.push_back({j, k, kappa});
    for (std::size_t K = 0; K < Ntilde; ++K) pf.push_back({j, tilde(K), Rat(-1)});
  }
  for (std::size_t J = 0; J < Ntilde; ++J) {
    for (std::size_t K = J + 1; K < Ntilde; ++K) pf.push_back({tilde(J), tilde(K), inv});
  }
  return GeneratingSeries(M, M, std::move(xf), std::move(pf), max_x_degree, max_pair_order);
}

Polynomial GeneratingSeries::coefficient(const IntVec& n, int pair_order) const {
  if (n.size() != ny_) throw InputError("index length mismatch");
  Polynomial out(nx_);
  const long degree = n.weight();
  if (degree < 0) return out;
  if (degree > max_x_degree_ || pair_order > max_pair_order_) {
    throw InputError("requested coefficient exceeds the computed truncation");
  }
  Key a(ny_);
  for (const auto& [key, c] : pair_part_) {
    if (key[ny_] > pair_order) continue;
    for (std::size_t i = 0; i < ny_; ++i) a[i] = -n[i] - key[i];
    if (auto it = x_part_.find(a); it != x_part_.end()) out += it->second * c;
  }
  return out;
}

int pair_order_bound(const IntVec& n) {
  long phi = 0;
  for (std::size_t i = 0; i < n.size(); ++i) phi += static_cast<long>(i) * n[i];
  return static_cast<int>(std::max(0L, phi));
}

int truncation_order(const IntVec& n) {
  const long w = n.weight();
  const long suggested = w + static_cast<long>(n.size()) * std::max(0, -n.min()) + 2;
  return static_cast<int>(std::max(suggested, w + pair_order_bound(n)));
}

namespace {

// A series with a larger truncation yields the same coefficients, so one
// series per (N, Ñ, κ) is kept and regrown on demand.
std::shared_ptr<const GeneratingSeries> deformed_series(std::size_t N, std::size_t Ntilde,
                                                        const Rat& kappa, int degree, int pair_order) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, std::size_t, std::string>, std::shared_ptr<const GeneratingSeries>>
      cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[std::make_tuple(N, Ntilde, kappa.str())];
  if (!slot || slot->max_x_degree() < degree || slot->max_pair_order() < pair_order) {
    if (slot) {
      degree = std::max(degree, slot->max_x_degree());
      pair_order = std::max(pair_order, slot->max_pair_order());
    }
    slot = std::make_shared<const GeneratingSeries>(
        GeneratingSeries::deformed(N, Ntilde, kappa, degree, pair_order));
  }
  return slot;
}

Polynomial certified_coefficient(const GeneratingSeries& s, const IntVec& n, int pair_order) {
  const Polynomial first = s.coefficient(n, pair_order);
  if (first != s.coefficient(n, pair_order + 2)) {
    throw InvariantViolation("truncated series not stable at " + n.str());
  }
  return first;
}

}  // namespace

SymPoly f_truncated_series(const IntVec& n, const Rat& kappa) {
  const std::size_t N = n.size();
  const long w = n.weight();
  if (w < 0) return SymPoly(N);
  const int pair_order = truncation_order(n) - static_cast<int>(w);
  const auto series =
      GeneratingSeries::standard(N, kappa, static_cast<int>(w), pair_order + 2);
  return SymPoly::from_polynomial(certified_coefficient(series, n, pair_order));
}

FToMMatrix f_to_m_matrix(int maxweight, std::size_t N, const Rat& kappa) {
  FToMMatrix out;
  out.labels = partitions_up_to(maxweight, N);
  std::stable_sort(out.labels.begin(), out.labels.end(), [](const auto& a, const auto& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return suffix_extension_less(a.vec(), b.vec());
  });
  const std::size_t size = out.labels.size();
  out.matrix = RatMatrix(size, size);
  std::vector<SymPoly> rows(size);
  parallel_for(size, [&](std::size_t i) { rows[i] = f_vector(out.labels[i].vec(), kappa); });
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) out.matrix(i, j) = rows[i].coeff(out.labels[j]);
  }
  for (int w = 0; w <= maxweight; ++w) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < size; ++i) {
      if (out.labels[i].weight() == w) idx.push_back(i);
    }
    out.block_determinants.push_back(out.matrix.submatrix(idx, idx).determinant());
  }
  return out;
}

Polynomial deformed_f(const DeformedIndex& idx, std::size_t N, std::size_t Ntilde,
                      const Rat& kappa) {
  if (kappa.is_zero()) throw InputError("deformed_f needs kappa != 0");
  if (idx.n.size() != N || idx.ntilde.size() != Ntilde) {
    throw InputError("deformed index length mismatch");
  }
  std::vector<int> parts(idx.n.begin(), idx.n.end());
  parts.insert(parts.end(), idx.ntilde.begin(), idx.ntilde.end());
  const IntVec joint(std::move(parts));
  const long w = joint.weight();
  if (w < 0) return Polynomial(N + Ntilde);
  const int pair_order = truncation_order(joint) - static_cast<int>(w);
  return certified_coefficient(*deformed_series(N, Ntilde, kappa, static_cast<int>(w), pair_order + 2),
                               joint, pair_order);
}

}  // namespace cspoly
