#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace toricgraph {

// Exact arithmetic backends.  Rational is the coefficient field for all
// Groebner and homology computations; Integer backs Hilbert numerators.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Prime field used for fast rank prediction.  Results obtained only here are
// probabilistic; exact confirmation runs over Rational.
class Fp {
 public:
  static constexpr std::uint64_t P = 2147483647ULL;  // 2^31 - 1

  Fp() : v_(0) {}
  explicit Fp(long long x) {
    long long r = x % static_cast<long long>(P);
    if (r < 0) r += static_cast<long long>(P);
    v_ = static_cast<std::uint64_t>(r);
  }

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp o) const { return from_raw((v_ + o.v_) % P); }
  Fp operator-(Fp o) const { return from_raw((v_ + P - o.v_) % P); }
  Fp operator*(Fp o) const { return from_raw((v_ * o.v_) % P); }
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }

  Fp inverse() const {
    // Fermat: v^(P-2) mod P.  P is prime and v != 0.
    std::uint64_t base = v_, result = 1;
    std::uint64_t e = P - 2;
    while (e) {
      if (e & 1) result = (result * base) % P;
      base = (base * base) % P;
      e >>= 1;
    }
    return from_raw(result);
  }

  bool operator==(Fp o) const { return v_ == o.v_; }

 private:
  static Fp from_raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint64_t v_;
};

}  // namespace toricgraph
