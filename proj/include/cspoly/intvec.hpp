#ifndef CSPOLY_INTVEC_HPP
#define CSPOLY_INTVEC_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "cspoly/rat.hpp"

namespace cspoly {

/// Integer vector n in Z^N. Negative parts are allowed.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::vector<int> parts) : parts_(std::move(parts)) {}
  IntVec(std::initializer_list<int> parts) : parts_(parts) {}

  static IntVec zero(std::size_t n) { return IntVec(std::vector<int>(n, 0)); }
  /// e_j with 0-based j.
  static IntVec unit(std::size_t n, std::size_t j);

  /// Parses "1,-2,3". Throws InputError.
  static IntVec parse(const std::string& text);

  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int& operator[](std::size_t i) { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// |n| = n_1 + ... + n_N.
  long weight() const;
  int min() const;
  int max() const;
  bool nonnegative() const;

  /// Suffix sums S_j = n_j + ... + n_N (0-based j, length N).
  std::vector<long> suffix_sums() const;
  std::vector<long> prefix_sums() const;

  IntVec reversed() const;
  std::string str() const;  // "(1,0,2)"

  IntVec& operator+=(const IntVec& o);
  IntVec& operator-=(const IntVec& o);
  friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
  friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }

  friend bool operator==(const IntVec&, const IntVec&) = default;
  friend auto operator<=>(const IntVec&, const IntVec&) = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing nonnegative vector with explicit trailing zeros.
class Partition {
 public:
  Partition() = default;
  /// Throws InputError unless parts are nonnegative and weakly decreasing.
  explicit Partition(IntVec parts);
  Partition(std::initializer_list<int> parts) : Partition(IntVec(parts)) {}

  static Partition parse(const std::string& text);

  const IntVec& vec() const { return v_; }
  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  long weight() const { return v_.weight(); }
  std::string str() const { return v_.str(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  IntVec v_;
};

std::ostream& operator<<(std::ostream& os, const IntVec& v);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// m ⪯ n: every suffix sum of m is at most the matching suffix sum of n.
bool suffix_leq(const IntVec& m, const IntVec& n);
/// mu ≤ lam in dominance: every prefix sum of mu is at most that of lam.
bool dominance_leq(const IntVec& mu, const IntVec& lam);
/// Sorts the parts weakly decreasing. Throws InputError on a negative part.
Partition to_partition(const IntVec& n);
/// n⁺_j = n_j + κ(N + 1 − j), j 1-based.
std::vector<Rat> shifted_plus(const IntVec& n, const Rat& kappa);
/// κ(κ−1)…(κ−p+1)/p!.
Rat gen_binomial(const Rat& kappa, int p);

/// All partitions of `weight` with exactly N parts (zeros included),
/// reverse lexicographic (largest first part first).
std::vector<Partition> partitions_of(long weight, std::size_t N);
/// Partitions of every weight 0..maxweight, grouped by increasing weight.
std::vector<Partition> partitions_up_to(long maxweight, std::size_t N);

/// Orders index vectors by (S_1, ..., S_N) lexicographically, S the suffix
/// sums. Any x ⪯ y with x != y has x before y, so this is a linear
/// extension of the suffix order.
bool suffix_extension_less(const IntVec& a, const IntVec& b);

}  // namespace cspoly

#endif
