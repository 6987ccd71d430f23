#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace toricgraph {

// Exponent vector with cached total degree.  Plain data, not tied to a
// context; every operation checks that variable counts agree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(size_t num_vars) : e_(num_vars, 0), deg_(0) {}
  static Monomial from_exponents(std::vector<int> exps);
  static Monomial variable(size_t num_vars, int var, int power = 1);

  size_t num_vars() const { return e_.size(); }
  int degree() const { return deg_; }
  int exponent(int var) const { return e_[static_cast<size_t>(var)]; }
  const std::vector<int>& exponents() const { return e_; }

  bool is_one() const { return deg_ == 0; }
  bool is_variable() const;  // exactly one exponent, equal to 1
  int support_size() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;    // this | o
  Monomial quotient_by(const Monomial& d) const;  // requires d | this
  bool coprime_with(const Monomial& o) const;

  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  struct Hash {
    size_t operator()(const Monomial& m) const {
      // FNV-1a over the exponent words.
      std::uint64_t h = 1469598103934665603ULL;
      for (int x : m.e_) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
        h *= 1099511628211ULL;
      }
      return static_cast<size_t>(h);
    }
  };

 private:
  std::vector<int> e_;
  int deg_ = 0;
};

enum class Ordering { LT, EQ, GT };

// Graded reverse lexicographic order, optionally as a two-block product
// (elimination) order.  priority[r] is the variable at rank r, rank 0
// highest.  Comparison per block: higher total degree wins; on a degree tie
// the monomial with the smaller exponent at the lowest-priority variable
// where they differ (scanning from lowest priority upward) wins.
class MonomialOrder {
 public:
  static MonomialOrder grevlex(std::vector<int> priority);
  // First block = ranks [0, first_block_size), compared before the rest.
  static MonomialOrder block_grevlex(std::vector<int> priority, int first_block_size);

  size_t num_vars() const { return priority_.size(); }
  int first_block_size() const { return split_; }
  const std::vector<int>& priority() const { return priority_; }
  bool is_block() const { return split_ > 0; }

  Ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Ordering::GT;
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Ordering::LT;
  }

  bool operator==(const MonomialOrder& o) const {
    return priority_ == o.priority_ && split_ == o.split_;
  }

  std::string describe() const;  // stable text form, used for cache keys

 private:
  MonomialOrder(std::vector<int> priority, int split);
  Ordering compare_range(const Monomial& a, const Monomial& b, int lo, int hi) const;

  std::vector<int> priority_;
  int split_;  // 0 means a single block
};

}  // namespace toricgraph
