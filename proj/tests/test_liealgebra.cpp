#include <doctest.h>

#include "krchar/charring.hpp"
#include "krchar/liealgebra.hpp"

using namespace krc;

namespace {

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  return a * b - b * a;
}

bool is_zero(const RatMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_SUITE("liealgebra") {

TEST_CASE("chevalley relations hold in every realization") {
  for (const char* s : {"B2", "B3", "C2", "C3", "D4"}) {
    RootSystem rs = build_root_system(LieType::parse(s));
    MatrixRealization m = build_realization(rs.type);
    const int N = m.ambient_dim;
    CHECK(N == (rs.type.family == Family::B ? 2 * rs.rank + 1 : 2 * rs.rank));

    for (const RootVec& a : rs.positive_roots) {
      Weight aw = rs.root_to_weight(a);
      // [h_i, x^{+-}_a] = +- a(h_i) x^{+-}_a
      for (int i = 0; i < rs.rank; ++i) {
        CHECK(commutator(m.h[i], m.xplus.at(a)) == m.xplus.at(a) * Rat(aw.c[i]));
        CHECK(commutator(m.h[i], m.xminus.at(a)) == m.xminus.at(a) * Rat(-aw.c[i]));
      }
    }
    // [x+_i, x-_i] = h_i on the simple roots
    for (int i = 0; i < rs.rank; ++i) {
      std::vector<int> c(rs.rank, 0);
      c[i] = 1;
      RootVec alpha(c);
      CHECK(commutator(m.xplus.at(alpha), m.xminus.at(alpha)) == m.h[i]);
    }
  }
}

TEST_CASE("the span closes under brackets with the expected dimension") {
  RootSystem rs = build_root_system(LieType::parse("B3"));
  MatrixRealization m = build_realization(rs.type);
  const int N = m.ambient_dim;
  std::vector<RatMatrix> basis;
  for (int i = 0; i < rs.rank; ++i) basis.push_back(m.h[i]);
  for (const RootVec& a : rs.positive_roots) {
    basis.push_back(m.xplus.at(a));
    basis.push_back(m.xminus.at(a));
  }
  CHECK(basis.size() == 21);  // |R| + rank
  RatMatrix flat((int)basis.size(), N * N);
  for (size_t b = 0; b < basis.size(); ++b)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) flat((int)b, i * N + j) = basis[b](i, j);
  CHECK(rank_exact(flat) == 21);

  // brackets of basis elements stay in the span
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) {
      RatMatrix br = commutator(basis[a], basis[b]);
      RatMatrix ext((int)basis.size() + 1, N * N);
      ext.topRows((int)basis.size()) = flat;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) ext((int)basis.size(), i * N + j) = br(i, j);
      CHECK(rank_exact(ext) == 21);
    }
}

TEST_CASE("C3 corner vector for the highest root") {
  RootSystem rs = build_root_system(LieType::parse("C3"));
  MatrixRealization m = build_realization(rs.type);
  const RatMatrix& low = m.xminus.at(rs.theta);
  // supported on the (2n,1) corner
  for (int i = 0; i < m.ambient_dim; ++i)
    for (int j = 0; j < m.ambient_dim; ++j)
      if (!(i == m.ambient_dim - 1 && j == 0)) CHECK(low(i, j).is_zero());
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<int> c(rs.rank, 0);
    c[i] = 1;
    CHECK(is_zero(commutator(m.xminus.at(RootVec(c)), low)));
  }
}

TEST_CASE("psi module is abelian with consistent lowering maps") {
  for (const char* s : {"B4", "C4", "D5"}) {
    RootSystem rs = build_root_system(LieType::parse(s));
    MatrixRealization m = build_realization(rs.type);
    PsiSet psi = psi_node(3, rs);
    REQUIRE(!psi.empty());
    PsiModule mod = build_psi_module(psi, m, rs);
    CHECK(mod.dim() == (int)psi.size());
    // lowering maps send basis vectors to basis vectors inside the span
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < mod.dim(); ++j)
        for (int g = 0; g < mod.dim(); ++g)
          if (!mod.lowering[i](g, j).is_zero())
            CHECK(mod.roots[g] ==
                  mod.roots[j] + RootVec([&] {
                    std::vector<int> c(rs.rank, 0);
                    c[i] = 1;
                    return c;
                  }()));
  }
}

TEST_CASE("c coefficient basics") {
  RootSystem b4 = build_root_system(LieType::parse("B4"));
  MatrixRealization m = build_realization(b4.type);
  PsiModule psi = build_psi_module(psi_node(3, b4), m, b4);

  Weight lam({1, 1, 1, 0});
  CHECK(c_coefficient(lam, lam, 0, psi, b4) == 1);
  CHECK(c_coefficient(lam, lam - Weight::fundamental(2, 4), 1, psi, b4) == 1);
}

TEST_CASE("table-scale c values in ranks five and six") {
  RootSystem b5 = build_root_system(LieType::parse("B5"));
  MatrixRealization m5 = build_realization(b5.type);
  PsiModule psi4 = build_psi_module(psi_node(4, b5), m5, b5);
  Weight lam({1, 1, 1, 1, 0});
  Weight nu = lam - Weight::fundamental(4, 5);
  CHECK(c_coefficient(lam, nu, 2, psi4, b5) == 3);

  // the (lambda - 2 w3, 3) entry of the C table carries coefficient
  // 2 delta(lambda(h1) >= 1 and lambda(h2) >= 1)
  RootSystem c4 = build_root_system(LieType::parse("C4"));
  MatrixRealization mc = build_realization(c4.type);
  PsiModule psi3 = build_psi_module(psi_node(3, c4), mc, c4);
  Weight lamc({1, 1, 2, 0});
  Weight nuc = lamc - Weight::fundamental(3, 4) * 2;
  CHECK(c_coefficient(lamc, nuc, 3, psi3, c4) == 2);
  Weight lamc0({0, 1, 2, 0});
  CHECK(c_coefficient(lamc0, lamc0 - Weight::fundamental(3, 4) * 2, 3, psi3, c4) ==
        0);
}

TEST_CASE("d coefficient basics and gamma gating") {
  RootSystem b3 = build_root_system(LieType::parse("B3"));
  MatrixRealization m = build_realization(b3.type);
  PsiModule psi = build_psi_module(psi_node(2, b3), m, b3);
  REQUIRE(psi.dim() == 1);

  Weight w2 = Weight::fundamental(2, 3);
  CHECK(d_coefficient(w2, w2, 0, psi, b3) == 1);
  CHECK(d_coefficient(w2, Weight::zero(3), 1, psi, b3) == 1);
  CHECK(d_coefficient(w2 * 2, w2, 1, psi, b3) == 1);
  CHECK_THROWS_AS(d_coefficient(w2, Weight::fundamental(1, 3), 1, psi, b3),
                  std::invalid_argument);
}

TEST_CASE("weight space profiles") {
  // three linearly independent roots: all 8 weight spaces one-dimensional
  RootSystem b4 = build_root_system(LieType::parse("B4"));
  MatrixRealization m4 = build_realization(b4.type);
  PsiModule p3 = build_psi_module(psi_node(3, b4), m4, b4);
  auto prof3 = weight_space_profile(p3, b4);
  CHECK(prof3.size() == 8);
  for (const auto& [w, dim] : prof3) CHECK(dim == 1);

  // Psi_4 in B5 and D6: 54 weights, 6 of dimension 2, 2 of dimension 3
  for (const char* s : {"B5", "D6"}) {
    RootSystem rs = build_root_system(LieType::parse(s));
    MatrixRealization m = build_realization(rs.type);
    PsiModule p4 = build_psi_module(psi_node(4, rs), m, rs);
    auto prof = weight_space_profile(p4, rs);
    CHECK(prof.size() == 54);
    int dim2 = 0, dim3 = 0;
    for (const auto& [w, dim] : prof) {
      if (dim == 2) ++dim2;
      if (dim == 3) ++dim3;
      CHECK(dim <= 3);
    }
    CHECK(dim2 == 6);
    CHECK(dim3 == 2);
  }

  // Psi_3 in C4: 51 weights, 13 of dimension 2
  RootSystem c4 = build_root_system(LieType::parse("C4"));
  MatrixRealization mc = build_realization(c4.type);
  PsiModule pc = build_psi_module(psi_node(3, c4), mc, c4);
  auto profc = weight_space_profile(pc, c4);
  CHECK(profc.size() == 51);
  int dim2 = 0;
  for (const auto& [w, dim] : profc) {
    CHECK(dim <= 2);
    if (dim == 2) ++dim2;
  }
  CHECK(dim2 == 13);
}

TEST_CASE("kernel dimensions ignore the chevalley scaling") {
  RootSystem c4 = build_root_system(LieType::parse("C4"));
  MatrixRealization base = build_realization(c4.type);
  Weight lam({1, 1, 1, 0});
  for (uint64_t seed : {7ull, 99ull, 1234ull}) {
    MatrixRealization rnd = randomize_chevalley_scaling(base, seed);
    PsiModule pa = build_psi_module(psi_node(3, c4), base, c4);
    PsiModule pb = build_psi_module(psi_node(3, c4), rnd, c4);
    for (int s = 0; s <= 3; ++s) {
      Weight nu = lam - Weight::fundamental(3, 4) * s;
      if (!nu.is_dominant()) continue;
      CHECK(c_coefficient(lam, nu, s, pa, c4) == c_coefficient(lam, nu, s, pb, c4));
    }
  }
}

TEST_CASE("c and d agree with the tensor-route oracle on small ranks") {
  for (const char* s : {"B2", "B3", "C2", "C3"}) {
    RootSystem rs = build_root_system(LieType::parse(s));
    MatrixRealization m = build_realization(rs.type);
    Weight adj = rs.root_to_weight(rs.theta);
    DominantCharacter g = DominantCharacter::simple(adj);
    for (int node = 1; node <= rs.rank; ++node) {
      PsiSet psi = psi_node(node, rs);
      if (psi.empty()) continue;
      PsiModule mod = build_psi_module(psi, m, rs);
      std::vector<Weight> lams = {Weight::fundamental(node, rs.rank),
                                  Weight::fundamental(node, rs.rank) * 2, rs.rho};
      for (const Weight& lam : lams) {
        GammaPoset gamma = gamma_set(lam, psi, rs);
        for (const GammaNode& n : gamma.nodes) {
          if (n.grade > 2) continue;
          DominantCharacter wedge = exterior_power(g, n.grade, rs);
          DominantCharacter sym = symmetric_power(g, n.grade, rs);
          long long c_oracle = tensor_multiplicity(wedge, lam, rs).at(n.mu);
          long long d_oracle = tensor_multiplicity(sym, lam, rs).at(n.mu);
          CHECK(c_coefficient(lam, n.mu, n.grade, mod, rs) == c_oracle);
          CHECK(d_coefficient(lam, n.mu, n.grade, mod, rs) == d_oracle);
        }
      }
    }
  }
}

TEST_CASE("nonzero c support is bounded by subsets of psi") {
  RootSystem b4 = build_root_system(LieType::parse("B4"));
  MatrixRealization m = build_realization(b4.type);
  PsiModule psi = build_psi_module(psi_node(3, b4), m, b4);
  Weight lam({2, 2, 2, 0});
  GammaPoset gamma = gamma_set(lam, psi_node(3, b4), b4);
  int nonzero = 0;
  for (const GammaNode& n : gamma.nodes)
    if (c_coefficient(lam, n.mu, n.grade, psi, b4) > 0) ++nonzero;
  CHECK(nonzero <= 8);  // 2^{|Psi|}
}

}  // TEST_SUITE
