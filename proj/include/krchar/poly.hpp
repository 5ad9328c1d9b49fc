#pragma once

#include <string>
#include <vector>

namespace krc {

// Dense integer polynomial in one variable t.
class Poly {
public:
  Poly() = default;
  explicit Poly(long long constant) {
    if (constant) coef_.push_back(constant);
  }
  static Poly monomial(long long c, int degree) {
    Poly p;
    if (c) {
      p.coef_.assign(degree + 1, 0);
      p.coef_[degree] = c;
    }
    return p;
  }

  bool is_zero() const { return coef_.empty(); }
  int degree() const { return (int)coef_.size() - 1; }
  long long operator[](int k) const {
    return k >= 0 && k < (int)coef_.size() ? coef_[k] : 0;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.coef_.resize(std::max(a.coef_.size(), b.coef_.size()), 0);
    for (size_t i = 0; i < out.coef_.size(); ++i)
      out.coef_[i] = a[(int)i] + b[(int)i];
    out.trim();
    return out;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly out;
    out.coef_.assign(a.coef_.size() + b.coef_.size() - 1, 0);
    for (size_t i = 0; i < a.coef_.size(); ++i)
      for (size_t j = 0; j < b.coef_.size(); ++j)
        out.coef_[i + j] += a.coef_[i] * b.coef_[j];
    out.trim();
    return out;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coef_ == b.coef_;
  }

  // p(-t)
  Poly negate_variable() const {
    Poly out = *this;
    for (size_t i = 1; i < out.coef_.size(); i += 2) out.coef_[i] = -out.coef_[i];
    return out;
  }

  long long eval(long long t) const {
    long long v = 0;
    for (size_t i = coef_.size(); i-- > 0;) v = v * t + coef_[i];
    return v;
  }

  std::string str() const {
    if (coef_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < coef_.size(); ++i) {
      if (coef_[i] == 0) continue;
      if (!s.empty()) s += coef_[i] > 0 ? " + " : " - ";
      else if (coef_[i] < 0) s += "-";
      long long a = coef_[i] < 0 ? -coef_[i] : coef_[i];
      if (i == 0) s += std::to_string(a);
      else {
        if (a != 1) s += std::to_string(a) + " ";
        s += i == 1 ? "t" : "t^" + std::to_string(i);
      }
    }
    return s;
  }

private:
  void trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
  }
  std::vector<long long> coef_;  // coef_[k] multiplies t^k
};

}  // namespace krc
