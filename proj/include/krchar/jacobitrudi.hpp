#pragma once

#include <map>
#include <string>
#include <vector>

#include "krchar/charring.hpp"
#include "krchar/gammaposet.hpp"

namespace krc {

// Sparse element of the free commutative ring Z[h_1, h_2, ...].  Monomials
// are weakly decreasing index sequences; h_0 is absorbed as 1 and any
// generator with negative index kills its monomial.
class JTElement {
public:
  JTElement() = default;
  static JTElement one() {
    JTElement e;
    e.terms_[{}] = 1;
    return e;
  }
  // h_k; k = 0 gives 1, k < 0 gives 0.
  static JTElement generator(int k);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, long long>& terms() const { return terms_; }

  JTElement& operator+=(const JTElement& o);
  JTElement& operator-=(const JTElement& o);
  friend JTElement operator+(JTElement a, const JTElement& b) { return a += b; }
  friend JTElement operator-(JTElement a, const JTElement& b) { return a -= b; }
  friend JTElement operator*(const JTElement& a, const JTElement& b);
  JTElement operator*(long long k) const;
  friend bool operator==(const JTElement& a, const JTElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;  // "h3 h1 - h4"

private:
  std::map<std::vector<int>, long long> terms_;
};

// i_lambda and the column lengths lambda_i = sum_{i <= k <= i_lambda}
// lambda(h_k) of the Jacobi-Trudi framing.  Construction validates that the
// weight avoids the spin/fork nodes of its type.
struct LambdaProfile {
  int i_lambda = 0;
  std::vector<int> parts;

  static LambdaProfile from(const Weight& lambda, const RootSystem& rs);
};

// ch of the level-k module attached to the first node: V(k w1) for B/D and
// the full symmetric-power ladder for C; zero for k < 0.
DominantCharacter boh(int k, const RootSystem& rs);

JTElement jt_symbolic(const Weight& lambda, const RootSystem& rs);
DominantCharacter jt_concrete(const Weight& lambda, const RootSystem& rs);

// Evaluation of a symbolic element in the character ring of rs.
DominantCharacter evaluate_jt(const JTElement& e, const RootSystem& rs);

// The classical determinantal expression for ch V(lambda) in the boh
// generators.  As printed it is inconsistent with boh for B/D already in the
// 1x1 case, so run calibrate_koike_terada before trusting a configuration.
JTElement koike_terada(const Weight& lambda, const RootSystem& rs);

struct CalibrationResult {
  bool pass = true;
  std::vector<std::string> notes;  // one line per probed weight
};

// Concretely evaluates the determinant for every profile on a small grid and
// compares against the simple character.  The symbolic conjecture route is
// enabled only for configurations that pass.
CalibrationResult calibrate_koike_terada(Family family, int i_lambda);

// One candidate pair (lambda + offset, s) of the alternating sum together
// with its computed coefficient; rows with non-dominant weight carry c = 0.
struct CoeffRow {
  Weight offset;  // length i_lambda
  int s = 0;
  long long c = 0;
  bool nu_dominant = true;
};

// All candidate rows (distinct subset sums of Psi_{i_lambda}), with
// coefficients computed in a stabilized rank when i_lambda touches the last
// node of a type C system.  `node` overrides i_lambda (it may only exceed
// the support of lambda); 0 means "use i_lambda".
std::vector<CoeffRow> coefficient_rows(const Weight& lambda,
                                       const RootSystem& rs, int node = 0);

// Residuals of the alternating Jacobi-Trudi identity; zero iff it holds.
DominantCharacter verify_conjecture_concrete(const Weight& lambda,
                                             const RootSystem& rs);
JTElement verify_conjecture_symbolic(const Weight& lambda,
                                     const RootSystem& rs);

// Residual of the 2^{|Psi|}-term alternating sum over subsets; requires
// every subtraction to stay dominant and every coefficient to be saturated.
DominantCharacter stable_formula_check(const Weight& lambda,
                                       const RootSystem& rs);

// Golden coefficient tables (shipped as JSON fixtures).
struct CoeffTableTerm {
  long long coeff = 0;
  std::vector<std::pair<int, int>> conditions;  // lambda(h_i) >= m
};
struct CoeffTableRow {
  std::vector<int> offset;
  int s = 0;
  std::vector<CoeffTableTerm> terms;
  long long eval(const Weight& lambda) const;
};
struct CoeffTable {
  std::string family;  // "BD" or "C"
  int i_lambda = 0;
  std::vector<CoeffTableRow> rows;
};

CoeffTable load_coeff_table(Family family, int i_lambda);

}  // namespace krc
