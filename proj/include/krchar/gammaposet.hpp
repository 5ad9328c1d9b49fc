#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krchar/rootdata.hpp"

namespace krc {

// A set Psi of positive roots together with how it was selected: as the
// argmax of the pairing with a dominant xi, as { a : eps_i(a) = 2 } for a
// node i, or as an explicit list.
struct PsiSet {
  std::vector<RootVec> roots;  // sorted
  std::optional<Weight> xi;
  std::optional<int> node;  // 1-based

  bool empty() const { return roots.empty(); }
  size_t size() const { return roots.size(); }
  std::string origin_str() const;
};

PsiSet psi_from_xi(const Weight& xi, const RootSystem& rs);
PsiSet psi_node(int i, const RootSystem& rs);
PsiSet psi_explicit(std::vector<RootVec> roots, const RootSystem& rs);

struct GammaNode {
  Weight mu;
  int grade = 0;

  friend bool operator==(const GammaNode& a, const GammaNode& b) {
    return a.grade == b.grade && a.mu == b.mu;
  }
  friend bool operator<(const GammaNode& a, const GammaNode& b) {
    if (a.grade != b.grade) return a.grade < b.grade;
    return a.mu < b.mu;
  }
  std::string str() const;
};

// The finite graded set of pairs (mu, r) with mu = lambda - sum of r
// elements of Psi (with repetition) and mu dominant, plus its cover edges
// ((mu,r) covered by (nu,r+1) iff nu - mu is a root or zero).
struct GammaPoset {
  GammaNode base;
  PsiSet psi;
  std::vector<GammaNode> nodes;               // sorted by (grade, weight)
  std::vector<std::pair<int, int>> covers;    // indices into nodes, low -> high

  int index_of(const GammaNode& n) const;     // -1 if absent
  bool contains(const GammaNode& n) const { return index_of(n) >= 0; }
  int max_grade() const;
};

GammaPoset gamma_set(const Weight& lambda, const PsiSet& psi,
                     const RootSystem& rs);

// Reachability of b from a in the cover digraph of Lambda = P+ x Z+.
bool leq(const GammaNode& a, const GammaNode& b, const RootSystem& rs);

// Every element of Lambda lying between two comparable members of Gamma is
// itself a member.
bool is_interval_closed(const GammaPoset& gamma, const RootSystem& rs);

struct RigidityReport {
  bool ok = true;
  std::string violation;  // human-readable counterexample when !ok
};

// Brute-force check of the exchange property of Psi: whenever a Z+-combination
// of arbitrary roots equals a Z+-combination of Psi, the Psi-combination uses
// no more summands, and ties force support inside Psi.  `bound` caps the total
// number of summands on each side.
RigidityReport rigidity_check(const PsiSet& psi, const RootSystem& rs, int bound);

std::string to_dot(const GammaPoset& gamma);
std::string to_json_string(const GammaPoset& gamma);

}  // namespace krc
