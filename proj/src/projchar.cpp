#include "krchar/projchar.hpp"

#include <sstream>
#include <stdexcept>

namespace krc {

ProjectiveCharacter projective_character(const Weight& lambda, const PsiSet& psi,
                                         const RootSystem& rs) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("projective_character: lambda not dominant");
  ProjectiveCharacter out;
  out.base = GammaNode{lambda, 0};
  out.psi = psi;
  if (psi.empty()) {
    out.graded.add(0, lambda, 1);
    return out;
  }
  const PsiModule& mod = shared_psi_module(psi, rs);
  GammaPoset gamma = gamma_set(lambda, psi, rs);
  for (const GammaNode& n : gamma.nodes) {
    long long d = d_coefficient(lambda, n.mu, n.grade, mod, rs);
    if (d) out.graded.add(n.grade, n.mu, d);
  }
  return out;
}

ProjectiveCharacter kr_character(int node, int m, const RootSystem& rs) {
  if (m < 1) throw std::invalid_argument("kr_character: level must be positive");
  return projective_character(Weight::fundamental(node, rs.rank) * m,
                              psi_node(node, rs), rs);
}

GradedCharacter verify_thm2(const Weight& lambda, const PsiSet& psi,
                            const RootSystem& rs) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("verify_thm2: lambda not dominant");
  GradedCharacter residual;
  if (psi.empty()) {
    residual.add(0, lambda, 1);  // the poset is the singleton (lambda, 0)
  } else {
    const PsiModule& mod = shared_psi_module(psi, rs);
    GammaPoset gamma = gamma_set(lambda, psi, rs);
    for (const GammaNode& n : gamma.nodes) {
      long long c = c_coefficient(lambda, n.mu, n.grade, mod, rs);
      if (!c) continue;
      const long long signed_c = n.grade % 2 ? -c : c;
      ProjectiveCharacter p = projective_character(n.mu, psi, rs);
      for (const auto& [deg, layer] : p.graded.layers)
        residual.add_layer(deg + n.grade, layer * signed_c);
    }
  }
  residual.add(0, lambda, -1);
  return residual;
}

std::string GammaMatrix::str() const {
  std::ostringstream os;
  for (size_t r = 0; r < entry.size(); ++r) {
    os << "[ ";
    for (size_t c = 0; c < entry[r].size(); ++c) {
      if (c) os << ", ";
      os << entry[r][c].str();
    }
    os << " ]\n";
  }
  return os.str();
}

std::pair<GammaMatrix, GammaMatrix> gamma_matrices(const Weight& lambda,
                                                   const PsiSet& psi,
                                                   const RootSystem& rs) {
  GammaPoset gamma = gamma_set(lambda, psi, rs);
  const int n = (int)gamma.nodes.size();
  GammaMatrix a, e;
  a.order = gamma.nodes;
  e.order = gamma.nodes;
  a.entry.assign(n, std::vector<Poly>(n));
  e.entry.assign(n, std::vector<Poly>(n));

  const PsiModule* mod = psi.empty() ? nullptr : &shared_psi_module(psi, rs);

  for (int col = 0; col < n; ++col) {
    const GammaNode& source = gamma.nodes[col];  // (mu, r)
    // the grading shift lets every column be computed at grade zero
    GammaPoset local = gamma_set(source.mu, psi, rs);
    for (const GammaNode& ln : local.nodes) {
      GammaNode shifted{ln.mu, ln.grade + source.grade};
      int row = gamma.index_of(shifted);
      if (row < 0)
        throw std::logic_error(
            "shifted local gamma node escaped the ambient gamma set");
      if (psi.empty()) {
        a.entry[row][col] = Poly(1);
        e.entry[row][col] = Poly(1);
        continue;
      }
      long long d = d_coefficient(source.mu, ln.mu, ln.grade, *mod, rs);
      long long c = c_coefficient(source.mu, ln.mu, ln.grade, *mod, rs);
      if (d) a.entry[row][col] = Poly::monomial(d, ln.grade);
      if (c) e.entry[row][col] = Poly::monomial(c, ln.grade);
    }
  }
  return {a, e};
}

bool matrix_identity_holds(const GammaMatrix& a, const GammaMatrix& e) {
  const int n = (int)a.order.size();
  if ((int)e.order.size() != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly acc;
      for (int k = 0; k < n; ++k)
        acc = acc + a.entry[i][k] * e.entry[k][j].negate_variable();
      if (!(acc == (i == j ? Poly(1) : Poly()))) return false;
    }
  return true;
}

}  // namespace krc
