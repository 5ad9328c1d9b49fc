#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "krchar/gammaposet.hpp"
#include "krchar/rootdata.hpp"

namespace krc {

// Explicit matrix model of g preserving an antidiagonal form: symmetric for
// B/D (so(2n+1), so(2n)) and symplectic for C (sp(2n)).  Brackets are literal
// matrix commutators; [x+_a, x-_a] is the coroot of a.
struct MatrixRealization {
  LieType type;
  int ambient_dim = 0;
  std::vector<RatMatrix> h;             // coroots of the simple roots
  std::map<RootVec, RatMatrix> xplus;   // positive roots
  std::map<RootVec, RatMatrix> xminus;  // positive roots -> vector in g_{-a}

  const RatMatrix& coroot(int i) const { return h[i]; }  // 0-based
};

MatrixRealization build_realization(LieType t);

// Rescales each root-vector pair by a random nonzero rational, keeping every
// [x+_a, x-_a] = h_a.  Kernel dimensions must not notice.
MatrixRealization randomize_chevalley_scaling(const MatrixRealization& m,
                                              uint64_t seed);

// The abelian ideal n^-_Psi with the action of the simple lowering operators
// on its span: lowering[i](k, j) is the coefficient of x^-_{beta_k} in
// [x^-_{alpha_{i+1}}, x^-_{beta_j}].
struct PsiModule {
  std::vector<RootVec> roots;    // beta_1 .. beta_m, sorted
  std::vector<Weight> weights;   // -beta_j in fundamental coordinates
  std::vector<RatMatrix> lowering;

  int dim() const { return (int)roots.size(); }
};

PsiModule build_psi_module(const PsiSet& psi, const MatrixRealization& m,
                           const RootSystem& rs);

// Process-wide memoized realization / Psi-module instances.
const MatrixRealization& shared_realization(LieType t);
const PsiModule& shared_psi_module(const PsiSet& psi, const RootSystem& rs);

// dim{ v in (wedge^s n^-_Psi)_{nu-lambda} : (x_i^-)^{nu(h_i)+1} v = 0 for all i }
long long c_coefficient(const Weight& lambda, const Weight& nu, int s,
                        const PsiModule& psi, const RootSystem& rs);

// Same on the symmetric power, with exponents mu(h_i)+1.  Throws when
// (mu, s) does not lie in Gamma(lambda, Psi).
long long d_coefficient(const Weight& lambda, const Weight& mu, int s,
                        const PsiModule& psi, const RootSystem& rs);

// Weight-space dimensions of the full exterior algebra of n^-_Psi
// (subset sums of -Psi).
std::map<Weight, int> weight_space_profile(const PsiModule& psi,
                                           const RootSystem& rs);

}  // namespace krc
