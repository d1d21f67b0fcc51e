#include "cspoly/intvec.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>

#include "cspoly/errors.hpp"

namespace cspoly {

namespace {

void require_same_length(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) {
    throw InputError("length mismatch: " + a.str() + " vs " + b.str());
  }
}

}  // namespace

IntVec IntVec::unit(std::size_t n, std::size_t j) {
  IntVec v = zero(n);
  v[j] = 1;
  return v;
}

IntVec IntVec::parse(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string::npos ? text.size() : comma;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    if (first != last && *first == '+') ++first;
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc() || ptr != last) {
      throw InputError("malformed integer vector '" + text + "'");
    }
    parts.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return IntVec(std::move(parts));
}

long IntVec::weight() const {
  long s = 0;
  for (int p : parts_) s += p;
  return s;
}

int IntVec::min() const { return parts_.empty() ? 0 : *std::min_element(begin(), end()); }
int IntVec::max() const { return parts_.empty() ? 0 : *std::max_element(begin(), end()); }
bool IntVec::nonnegative() const { return min() >= 0; }

std::vector<long> IntVec::suffix_sums() const {
  std::vector<long> s(parts_.size());
  long acc = 0;
  for (std::size_t i = parts_.size(); i-- > 0;) {
    acc += parts_[i];
    s[i] = acc;
  }
  return s;
}

std::vector<long> IntVec::prefix_sums() const {
  std::vector<long> s(parts_.size());
  long acc = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    acc += parts_[i];
    s[i] = acc;
  }
  return s;
}

IntVec IntVec::reversed() const {
  return IntVec(std::vector<int>(parts_.rbegin(), parts_.rend()));
}

std::string IntVec::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

IntVec& IntVec::operator+=(const IntVec& o) {
  require_same_length(*this, o);
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] += o.parts_[i];
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& o) {
  require_same_length(*this, o);
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] -= o.parts_[i];
  return *this;
}

Partition::Partition(IntVec parts) : v_(std::move(parts)) {
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] < 0 || (i && v_[i] > v_[i - 1])) {
      throw InputError("not a partition: " + v_.str());
    }
  }
}

Partition Partition::parse(const std::string& text) { return Partition(IntVec::parse(text)); }

std::ostream& operator<<(std::ostream& os, const IntVec& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

bool suffix_leq(const IntVec& m, const IntVec& n) {
  require_same_length(m, n);
  long sm = 0, sn = 0;
  for (std::size_t i = m.size(); i-- > 0;) {
    sm += m[i];
    sn += n[i];
    if (sm > sn) return false;
  }
  return true;
}

bool dominance_leq(const IntVec& mu, const IntVec& lam) {
  require_same_length(mu, lam);
  long sm = 0, sl = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    sm += mu[i];
    sl += lam[i];
    if (sm > sl) return false;
  }
  return true;
}

Partition to_partition(const IntVec& n) {
  if (!n.nonnegative()) throw InputError("negative part in " + n.str());
  std::vector<int> parts = n.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(IntVec(std::move(parts)));
}

std::vector<Rat> shifted_plus(const IntVec& n, const Rat& kappa) {
  const long N = static_cast<long>(n.size());
  std::vector<Rat> out;
  out.reserve(n.size());
  for (long j = 0; j < N; ++j) out.push_back(Rat(n[j]) + kappa * Rat(N - j));
  return out;
}

Rat gen_binomial(const Rat& kappa, int p) {
  if (p < 0) throw InputError("negative binomial order");
  Rat out(1);
  for (int i = 0; i < p; ++i) out *= (kappa - Rat(i)) / Rat(i + 1);
  return out;
}

std::vector<Partition> partitions_of(long weight, std::size_t N) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  std::vector<int> parts(N, 0);
  std::function<void(std::size_t, long, int)> rec = [&](std::size_t i, long left, int cap) {
    if (i == N) {
      if (left == 0) out.emplace_back(IntVec(parts));
      return;
    }
    const long slots = static_cast<long>(N - i);
    for (long v = std::min<long>(cap, left); v >= 0; --v) {
      if (v * slots < left) break;
      parts[i] = static_cast<int>(v);
      rec(i + 1, left - v, static_cast<int>(v));
    }
    parts[i] = 0;
  };
  if (N == 0) {
    if (weight == 0) out.emplace_back(IntVec{});
    return out;
  }
  rec(0, weight, static_cast<int>(weight));
  return out;
}

std::vector<Partition> partitions_up_to(long maxweight, std::size_t N) {
  std::vector<Partition> out;
  for (long w = 0; w <= maxweight; ++w) {
    auto block = partitions_of(w, N);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

bool suffix_extension_less(const IntVec& a, const IntVec& b) {
  return a.suffix_sums() < b.suffix_sums();
}

}  // namespace cspoly
