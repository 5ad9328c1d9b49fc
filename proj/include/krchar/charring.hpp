#pragma once

#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "krchar/rootdata.hpp"

namespace krc {

// Virtual module written in the basis of simple characters: a finitely
// supported map from dominant highest weights to integer multiplicities.
// Negative entries are allowed (determinant expansions are alternating).
class DominantCharacter {
public:
  DominantCharacter() = default;
  static DominantCharacter simple(const Weight& lambda) {
    DominantCharacter d;
    d.add(lambda, 1);
    return d;
  }
  static DominantCharacter one(int rank) { return simple(Weight::zero(rank)); }

  void add(const Weight& w, long long mult);
  long long at(const Weight& w) const;
  bool is_zero() const { return mult_.empty(); }
  size_t size() const { return mult_.size(); }
  const std::map<Weight, long long>& terms() const { return mult_; }

  DominantCharacter& operator+=(const DominantCharacter& o);
  DominantCharacter& operator-=(const DominantCharacter& o);
  friend DominantCharacter operator+(DominantCharacter a, const DominantCharacter& b) {
    return a += b;
  }
  friend DominantCharacter operator-(DominantCharacter a, const DominantCharacter& b) {
    return a -= b;
  }
  DominantCharacter operator*(long long k) const;
  friend bool operator==(const DominantCharacter& a, const DominantCharacter& b) {
    return a.mult_ == b.mult_;
  }

  long long dim(const RootSystem& rs) const;
  std::string str() const;  // "V(0,1,0) + 2 V(0,0,0)"

private:
  std::map<Weight, long long> mult_;  // no zero entries
};

// Full weight expansion of one simple module, stored on dominant orbit
// representatives (the expansion is Weyl invariant).  Orbits are expanded
// on demand; totals use orbit sizes.
class FormalCharacter {
public:
  FormalCharacter(LieType t, std::map<Weight, long long> dominant_mult)
      : type_(t), dom_(std::move(dominant_mult)) {}

  const std::map<Weight, long long>& dominant_mult() const { return dom_; }
  long long mult_at(const Weight& v, const RootSystem& rs) const;
  long long dim(const RootSystem& rs) const;
  long long support_size(const RootSystem& rs) const;  // distinct weights
  // Streams every (weight, multiplicity) of the full expansion.
  void for_each_weight(const RootSystem& rs,
                       const std::function<void(const Weight&, long long)>& fn) const;
  std::unordered_map<Weight, long long, WeightHash> full_expansion(
      const RootSystem& rs) const;

private:
  LieType type_;
  std::map<Weight, long long> dom_;
};

// ch_t: finitely many graded layers, each a virtual sum of simples.
struct GradedCharacter {
  std::map<int, DominantCharacter> layers;

  void add(int degree, const Weight& w, long long mult);
  void add_layer(int degree, const DominantCharacter& d);
  bool is_zero() const;
  GradedCharacter& operator-=(const GradedCharacter& o);
  friend bool operator==(const GradedCharacter& a, const GradedCharacter& b);
  std::string str() const;
};

// Freudenthal recursion; memoized per (type, lambda).
const FormalCharacter& simple_character(const Weight& lambda, const RootSystem& rs);

long long weyl_dim(const Weight& lambda, const RootSystem& rs);

// Decomposition of (sum_k M(k) V(k)) (x) V(lambda) into simples by the
// signed-reflection rule over the weights of the smaller tensor factor.
DominantCharacter tensor_multiplicity(const DominantCharacter& m,
                                      const Weight& lambda, const RootSystem& rs);

DominantCharacter tensor_product(const DominantCharacter& a,
                                 const DominantCharacter& b, const RootSystem& rs);

// Exterior / symmetric powers of an actual (nonnegative) character via the
// Newton recursions on Adams operations of the weight expansion.
DominantCharacter exterior_power(const DominantCharacter& m, int s,
                                 const RootSystem& rs);
DominantCharacter symmetric_power(const DominantCharacter& m, int s,
                                  const RootSystem& rs);

DominantCharacter graded_specialize(const GradedCharacter& g);

// Inverse of weight expansion on Weyl-invariant weight functions.
DominantCharacter decompose_weight_function(
    const std::unordered_map<Weight, long long, WeightHash>& f,
    const RootSystem& rs);

// In-memory memo control (used by tests and the cache layer).
void clear_character_memo();

}  // namespace krc
