#include "cspoly/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cspoly/errors.hpp"

namespace cspoly {

namespace {

void check_nvars(std::size_t a, std::size_t b) {
  if (a != b) throw InputError("variable count mismatch");
}

bool weakly_decreasing(const Exponent& e) {
  return std::is_sorted(e.begin(), e.end(), std::greater<>());
}

}  // namespace

std::vector<IntVec> orbit(const IntVec& v) {
  std::vector<int> parts = v.parts();
  std::sort(parts.begin(), parts.end());
  std::vector<IntVec> out;
  do {
    out.emplace_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

SymPoly SymPoly::constant(std::size_t nvars, const Rat& c) {
  SymPoly p(nvars);
  p.add_term(Partition(IntVec::zero(nvars)), c);
  return p;
}

SymPoly SymPoly::monomial(const Partition& lam, const Rat& c) {
  SymPoly p(lam.size());
  p.add_term(lam, c);
  return p;
}

SymPoly SymPoly::from_polynomial(const Polynomial& p) {
  SymPoly out(p.nvars());
  std::size_t orbit_terms = 0;
  for (const auto& [e, c] : p.terms()) {
    if (!weakly_decreasing(e)) continue;
    const Partition lam{IntVec(e)};
    for (const auto& member : orbit(lam.vec())) {
      if (p.coeff(member.parts()) != c) {
        throw InvariantViolation("polynomial is not symmetric at " + member.str());
      }
    }
    orbit_terms += orbit(lam.vec()).size();
    out.add_term(lam, c);
  }
  if (orbit_terms != p.size()) throw InvariantViolation("polynomial is not symmetric");
  return out;
}

Rat SymPoly::coeff(const Partition& lam) const {
  auto it = terms_.find(lam);
  return it == terms_.end() ? Rat(0) : it->second;
}

int SymPoly::degree() const {
  int d = -1;
  for (const auto& [lam, c] : terms_) d = std::max<int>(d, static_cast<int>(lam.weight()));
  return d;
}

bool SymPoly::is_homogeneous() const {
  std::set<long> w;
  for (const auto& [lam, c] : terms_) w.insert(lam.weight());
  return w.size() <= 1;
}

bool SymPoly::is_homogeneous_of(long d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.weight() == d; });
}

void SymPoly::add_term(const Partition& lam, const Rat& c) {
  if (lam.size() != nvars_) throw InputError("partition length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lam, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  check_nvars(nvars_, o.nvars_);
  for (const auto& [lam, c] : o.terms_) add_term(lam, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  check_nvars(nvars_, o.nvars_);
  for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lam, v] : terms_) v *= c;
  return *this;
}

// The coefficient of m_ν in m_a m_b is the number of pairs (α, β) in
// orbit(a) x orbit(b) with α + β = ν; count the pairs whose sum is sorted.
SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  check_nvars(a.nvars_, b.nvars_);
  const std::size_t n = a.nvars_;
  std::map<Partition, std::vector<IntVec>> orbits_b;
  for (const auto& [lb, cb] : b.terms_) orbits_b.emplace(lb, orbit(lb.vec()));
  SymPoly out(n);
  std::vector<int> sum(n);
  for (const auto& [la, ca] : a.terms_) {
    const auto oa = orbit(la.vec());
    for (const auto& [lb, cb] : b.terms_) {
      std::map<std::vector<int>, long> counts;
      for (const auto& alpha : oa) {
        for (const auto& beta : orbits_b.at(lb)) {
          for (std::size_t i = 0; i < n; ++i) sum[i] = alpha[i] + beta[i];
          if (weakly_decreasing(sum)) ++counts[sum];
        }
      }
      const Rat cc = ca * cb;
      for (const auto& [nu, count] : counts) out.add_term(Partition(IntVec(nu)), cc * Rat(count));
    }
  }
  return out;
}

Polynomial SymPoly::expand() const {
  Polynomial out(nvars_);
  for (const auto& [lam, c] : terms_) {
    for (const auto& member : orbit(lam.vec())) out.add_term(member.parts(), c);
  }
  return out;
}

Rat SymPoly::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != nvars_) throw InputError("evaluation point length mismatch");
  return expand().evaluate(point);
}

std::vector<std::pair<Partition, Rat>> SymPoly::sorted_terms() const {
  std::vector<std::pair<Partition, Rat>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return grevlex_greater(x.first.vec().parts(), y.first.vec().parts());
  });
  return out;
}

SymPoly poly_add(const SymPoly& a, const SymPoly& b) { return a + b; }
SymPoly poly_scale(const SymPoly& a, const Rat& c) { return a * c; }
SymPoly poly_mul(const SymPoly& a, const SymPoly& b) { return a * b; }
Rat evaluate(const SymPoly& p, const std::vector<Rat>& point) { return p.evaluate(point); }

}  // namespace cspoly
