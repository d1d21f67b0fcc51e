#include "cspoly/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cspoly/errors.hpp"

namespace cspoly {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_nvars(std::size_t a, std::size_t b) {
  if (a != b) throw InputError("variable count mismatch");
}

}  // namespace

bool grevlex_greater(const Exponent& a, const Exponent& b) {
  const int da = total(a), db = total(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rat& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i, const Rat& c) {
  Exponent e(nvars, 0);
  e[i] = 1;
  Polynomial p(nvars);
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::monomial(Exponent e, const Rat& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Rat Polynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

std::vector<int> Polynomial::degrees() const {
  std::set<int> s;
  for (const auto& [e, c] : terms_) s.insert(total(e));
  return {s.begin(), s.end()};
}

void Polynomial::add_term(const Exponent& e, const Rat& c) {
  if (e.size() != nvars_) throw InputError("exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_nvars(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_nvars(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_nvars(a.nvars_, b.nvars_);
  Polynomial out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    out.add_term(d, c * Rat(e[i]));
  }
  return out;
}

Polynomial Polynomial::times_quadratic(std::size_t i, const Rat& c2, const Rat& c1,
                                       const Rat& c0) const {
  Polynomial out(nvars_);
  const Rat* cs[3] = {&c0, &c1, &c2};
  for (const auto& [e, c] : terms_) {
    for (int k = 0; k < 3; ++k) {
      if (cs[k]->is_zero()) continue;
      Exponent d = e;
      d[i] += k;
      out.add_term(d, c * *cs[k]);
    }
  }
  return out;
}

// c x_i^a x_k^b R = c x_k^b R (x_i^a - x_k^a) + c x_k^{a+b} R, and
// (x_i^a - x_k^a)/(x_i - x_k) = sum_{t<a} x_i^t x_k^{a-1-t}.
Polynomial Polynomial::divide_by_difference(std::size_t i, std::size_t k) const {
  if (i == k || i >= nvars_ || k >= nvars_) throw InputError("bad variable pair");
  Polynomial quotient(nvars_), remainder(nvars_);
  for (const auto& [e, c] : terms_) {
    const int a = e[i], b = e[k];
    Exponent base = e;
    base[i] = 0;
    for (int t = 0; t < a; ++t) {
      base[i] = t;
      base[k] = b + a - 1 - t;
      quotient.add_term(base, c);
    }
    base[i] = 0;
    base[k] = a + b;
    remainder.add_term(base, c);
  }
  if (!remainder.is_zero()) {
    throw InvariantViolation("nonzero remainder in division by a variable difference");
  }
  return quotient;
}

Polynomial Polynomial::permuted(const std::vector<std::size_t>& perm) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent d(nvars_, 0);
    for (std::size_t j = 0; j < nvars_; ++j) d[perm[j]] = e[j];
    out.add_term(d, c);
  }
  return out;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != nvars_) throw InputError("evaluation point length mismatch");
  Rat sum(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i]) t *= point[i].pow(static_cast<unsigned>(e[i]));
    }
    sum += t;
  }
  return sum;
}

std::vector<std::pair<Exponent, Rat>> Polynomial::sorted_terms() const {
  std::vector<std::pair<Exponent, Rat>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return grevlex_greater(x.first, y.first); });
  return out;
}

}  // namespace cspoly
