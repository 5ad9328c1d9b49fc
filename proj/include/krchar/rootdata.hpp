#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "krchar/rational.hpp"

namespace krc {

enum class Family { B, C, D };

char family_letter(Family f);

// Classical type label, e.g. B4, C3, D5.  Rank restrictions: B and C need
// rank >= 2, D needs rank >= 4 (D3 is rejected rather than aliased to A3).
struct LieType {
  Family family;
  int rank;

  static LieType make(Family f, int rank);
  static LieType parse(const std::string& s);
  std::string str() const;

  friend bool operator==(const LieType& a, const LieType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

// Integer coordinate vector in the fundamental-weight basis; entry i is
// lambda(h_{i+1}).
struct Weight {
  std::vector<int> c;

  Weight() = default;
  explicit Weight(std::vector<int> coords) : c(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }
  static Weight fundamental(int i, int rank);  // omega_i, 1-based
  static Weight parse(const std::string& s, int rank);

  int rank() const { return (int)c.size(); }
  bool is_zero() const;
  bool is_dominant() const;
  std::string str() const;  // "1,0,2"

  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return a.c != b.c; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  Weight operator*(int k) const;
};

// Integer coordinate vector in the simple-root basis.
struct RootVec {
  std::vector<int> c;

  RootVec() = default;
  explicit RootVec(std::vector<int> coords) : c(std::move(coords)) {}

  int rank() const { return (int)c.size(); }
  int height() const;                       // coordinate sum
  int epsilon(int i) const { return c[i - 1]; }  // 1-based

  friend bool operator==(const RootVec& a, const RootVec& b) { return a.c == b.c; }
  friend bool operator!=(const RootVec& a, const RootVec& b) { return a.c != b.c; }
  friend bool operator<(const RootVec& a, const RootVec& b);  // by (height, lex)
  friend RootVec operator+(const RootVec& a, const RootVec& b);
  friend RootVec operator-(const RootVec& a, const RootVec& b);
  RootVec operator-() const;
  std::string str() const;
};

struct WeightHash {
  size_t operator()(const Weight& w) const {
    size_t h = 0xcbf29ce484222325ULL;
    for (int x : w.c) h = (h ^ (size_t)(unsigned)x) * 0x100000001b3ULL;
    return h;
  }
};

// Root-system data for one classical type.  The bilinear form is normalized
// so long roots have squared length 2; only ratios matter downstream.
class RootSystem {
public:
  explicit RootSystem(LieType t);

  LieType type;
  int rank;
  std::vector<RootVec> positive_roots;  // sorted by (height, lex)
  Eigen::MatrixXi cartan;               // cartan(i,j) = 2(a_i,a_j)/(a_i,a_i), 0-based
  RatMatrix cartan_inv;
  std::vector<Rat> d;  // d_i = (a_i,a_i)/2
  Weight rho;
  RootVec theta;

  Weight root_to_weight(const RootVec& r) const;
  // Simple-root coordinates of a weight-lattice vector, when integral.
  std::optional<RootVec> weight_to_root_coords(const Weight& w) const;
  bool is_root(const RootVec& r) const;
  bool is_positive_root(const RootVec& r) const;
  // mu <= lambda in the root-lattice partial order.
  bool dominance_leq(const Weight& mu, const Weight& lambda) const;

  // maximal pairing (beta, xi) over all roots beta, and its argmax set
  Rat max_root_pairing(const Weight& xi) const;

private:
  std::vector<std::vector<int>> root_index_;  // lookup via sorted vector
  std::vector<RootVec> all_roots_sorted_;     // +/- roots, lex-sorted coords
};

RootSystem build_root_system(LieType t);

Rat bilinear(const Weight& a, const Weight& b, const RootSystem& rs);
Rat bilinear(const Weight& a, const RootVec& b, const RootSystem& rs);
Rat bilinear(const RootVec& a, const Weight& b, const RootSystem& rs);
Rat bilinear(const RootVec& a, const RootVec& b, const RootSystem& rs);

// Weyl-normal form with sign: returns (w(v), (-1)^{len(w)}) for the w making
// v dominant, or sign 0 when v is fixed by a reflection (equivalently the
// dominant form lies on a wall).
std::pair<Weight, int> to_dominant_signed(const Weight& v, const RootSystem& rs);
Weight to_dominant(const Weight& v, const RootSystem& rs);

// Coordinates of the highest root in the simple-root basis.
std::vector<int> epsilon_theta(LieType t);

// Largest i (1-based) with lambda(h_i) > 0; 0 for the zero weight.
int i_lambda(const Weight& w);

// |W| and orbit/stabilizer sizes (stabilizers of dominant weights are
// parabolic, so this is a product over sub-diagram components).
long long weyl_order(LieType t);
long long weyl_orbit_size(const Weight& dominant, const RootSystem& rs);
std::vector<Weight> weyl_orbit(const Weight& dominant, const RootSystem& rs);

// All dominant mu with lambda - mu in Q+, sorted by increasing height of
// lambda - mu (lambda itself first).
std::vector<Weight> dominant_weights_below(const Weight& lambda,
                                           const RootSystem& rs);

}  // namespace krc
