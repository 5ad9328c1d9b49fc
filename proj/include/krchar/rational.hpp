#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace krc {

// Exact rational scalar on 64-bit numerator/denominator.  All arithmetic
// goes through 128-bit intermediates and throws std::overflow_error if a
// reduced result no longer fits; nothing in this library is allowed to
// round.  Invariant: den > 0 and gcd(|num|, den) == 1.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) { assign(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Exact integer value; throws if not an integer.
  long long integer() const {
    if (den_ != 1) throw std::domain_error("Rat: not an integer: " + str());
    return num_;
  }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  using i128 = __int128;

  void assign(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
  }

  static Rat from128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n, b = d;
    while (b) { i128 t = a % b; a = b; b = t; }  // gcd
    if (a > 1) { n /= a; d /= a; }
    constexpr i128 lo = -i128(0x7fffffffffffffffLL) - 1;
    constexpr i128 hi = i128(0x7fffffffffffffffLL);
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("Rat: 64-bit overflow");
    Rat r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }

  long long num_;
  long long den_;
};

inline Rat abs(const Rat& r) { return r < Rat(0) ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rat& r);

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// Rank of an exact rational matrix by Gaussian elimination with
// row-primitivization after each pivot step (keeps entries small).
int rank_exact(RatMatrix m);

// Dimension of the joint kernel of a vertically stacked family of maps,
// i.e. cols - rank of the stack.
int kernel_dim_exact(const RatMatrix& stacked);

}  // namespace krc

namespace Eigen {
template <>
struct NumTraits<krc::Rat> : GenericNumTraits<krc::Rat> {
  typedef krc::Rat Real;
  typedef krc::Rat NonInteger;
  typedef krc::Rat Nested;
  typedef krc::Rat Literal;
  static inline Real epsilon() { return krc::Rat(0); }
  static inline Real dummy_precision() { return krc::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 12,
    MulCost = 12
  };
};
}  // namespace Eigen
