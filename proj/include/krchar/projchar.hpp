#pragma once

#include <string>
#include <vector>

#include "krchar/charring.hpp"
#include "krchar/gammaposet.hpp"
#include "krchar/liealgebra.hpp"
#include "krchar/poly.hpp"

namespace krc {

// Graded character of the projective cover of the simple object (lambda, 0)
// in the truncated category carved out by Gamma(lambda, Psi).
struct ProjectiveCharacter {
  GammaNode base;
  PsiSet psi;
  GradedCharacter graded;

  long long dim_at_t1(const RootSystem& rs) const {
    return graded_specialize(graded).dim(rs);
  }
};

ProjectiveCharacter projective_character(const Weight& lambda, const PsiSet& psi,
                                         const RootSystem& rs);

// Graded character of the q=1 specialization of the Kirillov-Reshetikhin
// module with label (node i, level m); a single layer when eps_i(theta) = 1.
ProjectiveCharacter kr_character(int node, int m, const RootSystem& rs);

// Residual of the alternating character identity
//   sum_{(nu,s)} (-t)^s c(lambda,nu,s) ch_t P(nu,0) - ch V(lambda);
// identically zero when the identity holds.
GradedCharacter verify_thm2(const Weight& lambda, const PsiSet& psi,
                            const RootSystem& rs);

// Square matrices over Z[t] indexed by a fixed enumeration of Gamma.
struct GammaMatrix {
  std::vector<GammaNode> order;
  std::vector<std::vector<Poly>> entry;  // entry[row][col]

  std::string str() const;
};

// A(t): graded Jordan-Hoelder multiplicities of the projectives;
// E(t): the alternating coefficients.  A(t) E(-t) = Id.
std::pair<GammaMatrix, GammaMatrix> gamma_matrices(const Weight& lambda,
                                                   const PsiSet& psi,
                                                   const RootSystem& rs);

bool matrix_identity_holds(const GammaMatrix& a, const GammaMatrix& e);

}  // namespace krc
