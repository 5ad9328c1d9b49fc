#include "krchar/liealgebra.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace krc {

namespace {

std::vector<int> root_to_e(const RootVec& r, LieType t) {
  const int n = t.rank;
  std::vector<std::vector<int>> simple(n, std::vector<int>(n, 0));
  for (int i = 0; i + 1 < n; ++i) {
    simple[i][i] = 1;
    simple[i][i + 1] = -1;
  }
  switch (t.family) {
    case Family::B: simple[n - 1][n - 1] = 1; break;
    case Family::C: simple[n - 1][n - 1] = 2; break;
    case Family::D:
      simple[n - 1][n - 2] = 1;
      simple[n - 1][n - 1] = 1;
      break;
  }
  std::vector<int> e(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[j] += r.c[i] * simple[i][j];
  return e;
}

RatMatrix unit(int N, int i, int j) {  // 1-based
  RatMatrix m = RatMatrix::Zero(N, N);
  m(i - 1, j - 1) = Rat(1);
  return m;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) {
  return a * b - b * a;
}

// Matrix for the root space of the e-basis vector `e` (any sign pattern).
RatMatrix root_space_matrix(const std::vector<int>& e, LieType t, int N) {
  const int n = t.rank;
  auto mirror = [&](int i) { return N + 1 - i; };
  std::vector<int> pos, neg;
  int two = 0, minus_two = 0;
  for (int k = 0; k < n; ++k) {
    if (e[k] == 1) pos.push_back(k + 1);
    if (e[k] == -1) neg.push_back(k + 1);
    if (e[k] == 2) two = k + 1;
    if (e[k] == -2) minus_two = k + 1;
  }
  if (two) return unit(N, two, mirror(two));
  if (minus_two) return unit(N, mirror(minus_two), minus_two);
  if (pos.size() == 1 && neg.size() == 1) {
    int i = pos[0], j = neg[0];
    return unit(N, i, j) - unit(N, mirror(j), mirror(i));
  }
  const Rat sgn = t.family == Family::C ? Rat(1) : Rat(-1);
  if (pos.size() == 2) {
    int i = pos[0], j = pos[1];
    return unit(N, i, mirror(j)) + unit(N, j, mirror(i)) * sgn;
  }
  if (neg.size() == 2) {
    int i = neg[0], j = neg[1];
    return unit(N, mirror(j), i) + unit(N, mirror(i), j) * sgn;
  }
  if (pos.size() == 1 && t.family == Family::B) {
    int i = pos[0];
    return unit(N, i, n + 1) - unit(N, n + 1, mirror(i));
  }
  if (neg.size() == 1 && t.family == Family::B) {
    int i = neg[0];
    return unit(N, n + 1, i) - unit(N, mirror(i), n + 1);
  }
  throw std::logic_error("unrecognized root pattern");
}

Rat e_norm_factor(Family f) {  // (e_i, e_j) = factor * delta_ij
  return f == Family::C ? Rat(1, 2) : Rat(1);
}

RatMatrix coroot_matrix(const std::vector<int>& e, LieType t, int N) {
  const int n = t.rank;
  const Rat ee = e_norm_factor(t.family);
  Rat norm(0);
  for (int k = 0; k < n; ++k) norm += Rat(e[k]) * Rat(e[k]) * ee;
  RatMatrix h = RatMatrix::Zero(N, N);
  for (int k = 0; k < n; ++k) {
    Rat tk = Rat(2) * Rat(e[k]) * ee / norm;
    h(k, k) = tk;
    h(N - 1 - k, N - 1 - k) = -tk;
  }
  return h;
}

}  // namespace

MatrixRealization build_realization(LieType t) {
  MatrixRealization m;
  m.type = t;
  const int n = t.rank;
  m.ambient_dim = t.family == Family::B ? 2 * n + 1 : 2 * n;
  const int N = m.ambient_dim;

  RootSystem rs = build_root_system(t);
  for (const RootVec& alpha : rs.positive_roots) {
    std::vector<int> e = root_to_e(alpha, t);
    std::vector<int> eneg(e);
    for (int& x : eneg) x = -x;
    RatMatrix xp = root_space_matrix(e, t, N);
    RatMatrix xm = root_space_matrix(eneg, t, N);
    RatMatrix target = coroot_matrix(e, t, N);
    RatMatrix k = commutator(xp, xm);
    // k must be proportional to the coroot; rescale x- so they agree
    Rat factor(0);
    for (int a = 0; a < N && factor.is_zero(); ++a)
      if (!target(a, a).is_zero()) factor = k(a, a) / target(a, a);
    if (factor.is_zero()) throw std::logic_error("degenerate sl2 triple");
    xm = xm * (Rat(1) / factor);
    if (commutator(xp, xm) != target)
      throw std::logic_error("commutator is not the coroot");
    m.xplus.emplace(alpha, std::move(xp));
    m.xminus.emplace(alpha, std::move(xm));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    m.h.push_back(coroot_matrix(root_to_e(RootVec(c), t), t, N));
  }
  return m;
}

const MatrixRealization& shared_realization(LieType t) {
  static std::mutex mu;
  static std::map<std::string, MatrixRealization> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t.str());
  if (it == cache.end()) it = cache.emplace(t.str(), build_realization(t)).first;
  return it->second;
}

const PsiModule& shared_psi_module(const PsiSet& psi, const RootSystem& rs) {
  static std::mutex mu;
  static std::map<std::string, PsiModule> cache;
  std::string key = rs.type.str() + "#";
  for (const RootVec& r : psi.roots) key += r.str() + ";";
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, build_psi_module(psi, shared_realization(rs.type), rs))
             .first;
  return it->second;
}

MatrixRealization randomize_chevalley_scaling(const MatrixRealization& m,
                                              uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Rat choices[] = {Rat(1), Rat(-1), Rat(2),      Rat(-2),
                         Rat(1, 2), Rat(-1, 2), Rat(3), Rat(-3)};
  MatrixRealization out = m;
  for (auto& [root, xp] : out.xplus) {
    const Rat c = choices[rng() % 8];
    xp = xp * c;
    out.xminus[root] = out.xminus[root] * (Rat(1) / c);
  }
  return out;
}

PsiModule build_psi_module(const PsiSet& psi, const MatrixRealization& m,
                           const RootSystem& rs) {
  PsiModule mod;
  mod.roots = psi.roots;
  std::sort(mod.roots.begin(), mod.roots.end());
  const int k = (int)mod.roots.size();
  for (const RootVec& beta : mod.roots) {
    Weight w = rs.root_to_weight(beta);
    for (int& x : w.c) x = -x;
    mod.weights.push_back(std::move(w));
  }

  // abelianness of n^-_Psi
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      RatMatrix br = commutator(m.xminus.at(mod.roots[a]), m.xminus.at(mod.roots[b]));
      if (br != RatMatrix::Zero(m.ambient_dim, m.ambient_dim))
        throw std::invalid_argument("psi set does not span an abelian subalgebra");
    }

  for (int i = 0; i < rs.rank; ++i) {
    std::vector<int> c(rs.rank, 0);
    c[i] = 1;
    const RootVec alpha_i(c);
    const RatMatrix& low = m.xminus.at(alpha_i);
    RatMatrix L = RatMatrix::Zero(k, k);
    for (int j = 0; j < k; ++j) {
      RatMatrix br = commutator(low, m.xminus.at(mod.roots[j]));
      if (br == RatMatrix::Zero(m.ambient_dim, m.ambient_dim)) continue;
      const RootVec gamma = mod.roots[j] + alpha_i;
      auto it = std::find(mod.roots.begin(), mod.roots.end(), gamma);
      if (it == mod.roots.end())
        throw std::invalid_argument(
            "psi set is not an ideal under the lowering operators");
      const int g = (int)(it - mod.roots.begin());
      const RatMatrix& base = m.xminus.at(gamma);
      Rat coef(0);
      for (int a = 0; a < m.ambient_dim && coef.is_zero(); ++a)
        for (int b = 0; b < m.ambient_dim && coef.is_zero(); ++b)
          if (!base(a, b).is_zero()) coef = br(a, b) / base(a, b);
      if (br != base * coef)
        throw std::logic_error("bracket not proportional to a basis vector");
      L(g, j) = coef;
    }
    mod.lowering.push_back(std::move(L));
  }
  return mod;
}

namespace {

// Index multisets (symmetric) or strictly increasing index sets (exterior)
// represent monomials in the basis vectors of n^-_Psi.
using Monomial = std::vector<int>;
using SparseVec = std::map<Monomial, Rat>;

SparseVec apply_lowering(const PsiModule& psi, int i, const SparseVec& v,
                         bool exterior) {
  const RatMatrix& L = psi.lowering[i];
  const int m = psi.dim();
  SparseVec out;
  for (const auto& [mono, coef] : v) {
    for (size_t pos = 0; pos < mono.size(); ++pos) {
      const int j = mono[pos];
      for (int g = 0; g < m; ++g) {
        if (L(g, j).is_zero()) continue;
        Monomial nm = mono;
        nm[pos] = g;
        Rat term = coef * L(g, j);
        if (exterior) {
          bool repeat = false;
          for (size_t q = 0; q < nm.size(); ++q)
            if (q != pos && nm[q] == g) repeat = true;
          if (repeat) continue;
          // parity of moving the replaced entry to its sorted slot
          int old_pos = (int)pos, new_pos = 0;
          for (size_t q = 0; q < nm.size(); ++q)
            if (q != pos && nm[q] < g) ++new_pos;
          if ((old_pos - new_pos) % 2 != 0) term = -term;
        }
        std::sort(nm.begin(), nm.end());
        Rat& slot = out[nm];
        slot += term;
        if (slot.is_zero()) out.erase(nm);
      }
    }
  }
  return out;
}

long long kernel_of_conditions(const PsiModule& psi, const RootSystem& rs,
                               const std::vector<Monomial>& basis,
                               const std::vector<int>& exponents,
                               bool exterior) {
  const int dim = (int)basis.size();
  if (dim == 0) return 0;
  // rows: for each simple i, the images of every basis monomial under the
  // iterated lowering operator, expressed over the reached monomials
  std::vector<RatMatrix> blocks;
  int total_rows = 0;
  for (int i = 0; i < rs.rank; ++i) {
    std::vector<SparseVec> images(dim);
    for (int b = 0; b < dim; ++b) {
      SparseVec v;
      v[basis[b]] = Rat(1);
      for (int rep = 0; rep < exponents[i] && !v.empty(); ++rep)
        v = apply_lowering(psi, i, v, exterior);
      images[b] = std::move(v);
    }
    std::map<Monomial, int> rows;
    for (const SparseVec& v : images)
      for (const auto& [mono, coef] : v)
        rows.emplace(mono, (int)rows.size());
    if (rows.empty()) continue;
    RatMatrix block = RatMatrix::Zero((int)rows.size(), dim);
    for (int b = 0; b < dim; ++b)
      for (const auto& [mono, coef] : images[b])
        block(rows.at(mono), b) = coef;
    total_rows += (int)block.rows();
    blocks.push_back(std::move(block));
  }
  if (blocks.empty()) return dim;
  RatMatrix stacked = RatMatrix::Zero(total_rows, dim);
  int at = 0;
  for (const RatMatrix& b : blocks) {
    stacked.block(at, 0, b.rows(), dim) = b;
    at += (int)b.rows();
  }
  return kernel_dim_exact(stacked);
}

void collect_subsets(const PsiModule& psi, const Weight& target, int s,
                     bool multiset, std::vector<Monomial>& out) {
  Monomial mono;
  Weight acc = Weight::zero(target.rank());
  std::function<void(int)> rec = [&](int start) {
    if ((int)mono.size() == s) {
      if (acc == target) out.push_back(mono);
      return;
    }
    const int need = s - (int)mono.size();
    for (int i = start; i < psi.dim(); ++i) {
      if (!multiset && psi.dim() - i < need) break;
      mono.push_back(i);
      acc = acc + psi.weights[i];
      rec(multiset ? i : i + 1);
      acc = acc - psi.weights[i];
      mono.pop_back();
    }
  };
  rec(0);
}

}  // namespace

long long c_coefficient(const Weight& lambda, const Weight& nu, int s,
                        const PsiModule& psi, const RootSystem& rs) {
  if (!nu.is_dominant())
    throw std::invalid_argument("c_coefficient: nu not dominant");
  if (s < 0) return 0;
  const Weight target = nu - lambda;
  std::vector<Monomial> basis;
  if (s == 0) {
    if (target.is_zero()) return 1;
    return 0;
  }
  if (s > psi.dim()) return 0;
  collect_subsets(psi, target, s, /*multiset=*/false, basis);
  if (basis.empty()) return 0;
  std::vector<int> exponents(rs.rank);
  for (int i = 0; i < rs.rank; ++i) exponents[i] = nu.c[i] + 1;
  return kernel_of_conditions(psi, rs, basis, exponents, /*exterior=*/true);
}

long long d_coefficient(const Weight& lambda, const Weight& mu, int s,
                        const PsiModule& psi, const RootSystem& rs) {
  if (!mu.is_dominant())
    throw std::invalid_argument("d_coefficient: mu not dominant");
  if (s < 0) throw std::invalid_argument("d_coefficient: negative grade");
  const Weight target = mu - lambda;
  std::vector<Monomial> basis;
  if (s == 0) {
    if (target.is_zero()) return 1;
    throw std::invalid_argument("d_coefficient: (mu, s) not in Gamma(lambda, Psi)");
  }
  collect_subsets(psi, target, s, /*multiset=*/true, basis);
  if (basis.empty())
    throw std::invalid_argument("d_coefficient: (mu, s) not in Gamma(lambda, Psi)");
  std::vector<int> exponents(rs.rank);
  for (int i = 0; i < rs.rank; ++i) exponents[i] = mu.c[i] + 1;
  return kernel_of_conditions(psi, rs, basis, exponents, /*exterior=*/false);
}

std::map<Weight, int> weight_space_profile(const PsiModule& psi,
                                           const RootSystem& rs) {
  std::map<Weight, int> out;
  const int m = psi.dim();
  if (m > 30) throw std::invalid_argument("weight_space_profile: psi too large");
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Weight w = Weight::zero(rs.rank);
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) w = w + psi.weights[i];
    out[w] += 1;
  }
  return out;
}

}  // namespace krc
