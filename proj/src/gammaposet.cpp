#include "krchar/gammaposet.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace krc {

std::string PsiSet::origin_str() const {
  if (node) return "node:" + std::to_string(*node);
  if (xi) return "xi:" + xi->str();
  return "explicit";
}

std::string GammaNode::str() const {
  return "(" + mu.str() + "; " + std::to_string(grade) + ")";
}

PsiSet psi_from_xi(const Weight& xi, const RootSystem& rs) {
  if (xi.rank() != rs.rank) throw std::invalid_argument("psi_from_xi: dim mismatch");
  if (!xi.is_dominant()) throw std::invalid_argument("psi_from_xi: xi not dominant");
  if (xi.is_zero())
    throw std::invalid_argument("psi_from_xi: xi = 0 selects every root");
  const Rat best = rs.max_root_pairing(xi);
  PsiSet psi;
  psi.xi = xi;
  for (const RootVec& r : rs.positive_roots) {
    if (bilinear(xi, r, rs) == best) psi.roots.push_back(r);
    if (bilinear(xi, -r, rs) == best) psi.roots.push_back(-r);  // cannot happen
  }
  std::sort(psi.roots.begin(), psi.roots.end());
  for (const RootVec& r : psi.roots)
    if (!rs.is_positive_root(r))
      throw std::logic_error("argmax set left the positive roots");
  return psi;
}

PsiSet psi_node(int i, const RootSystem& rs) {
  if (i < 1 || i > rs.rank) throw std::invalid_argument("psi_node: bad node");
  PsiSet psi;
  psi.node = i;
  for (const RootVec& r : rs.positive_roots)
    if (r.epsilon(i) == 2) psi.roots.push_back(r);
  std::sort(psi.roots.begin(), psi.roots.end());
  return psi;
}

PsiSet psi_explicit(std::vector<RootVec> roots, const RootSystem& rs) {
  for (const RootVec& r : roots)
    if (!rs.is_positive_root(r))
      throw std::invalid_argument("psi_explicit: not a positive root: " + r.str());
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  PsiSet psi;
  psi.roots = std::move(roots);
  return psi;
}

int GammaPoset::index_of(const GammaNode& n) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
  if (it != nodes.end() && *it == n) return (int)(it - nodes.begin());
  return -1;
}

int GammaPoset::max_grade() const {
  return nodes.empty() ? 0 : nodes.back().grade;
}

GammaPoset gamma_set(const Weight& lambda, const PsiSet& psi,
                     const RootSystem& rs) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("gamma_set: lambda not dominant");
  GammaPoset g;
  g.base = GammaNode{lambda, 0};
  g.psi = psi;

  std::set<GammaNode> found;
  found.insert(g.base);

  if (!psi.empty()) {
    // Per-coordinate box: lambda - mu has simple-root coordinates at most
    // (lambda, omega_j) / d_j when mu is dominant.
    std::vector<long long> box(rs.rank, 0);
    for (int j = 0; j < rs.rank; ++j) {
      Rat p(0);
      for (int k = 0; k < rs.rank; ++k)
        p += Rat(lambda.c[k]) * rs.d[k] * rs.cartan_inv(k, j);
      Rat lim = p / rs.d[j];
      box[j] = lim.num() / lim.den();
    }
    std::optional<long long> grade_cap;
    if (psi.xi) {
      const Rat m = rs.max_root_pairing(*psi.xi);
      Rat lim = bilinear(lambda, *psi.xi, rs) / m;
      grade_cap = lim.num() / lim.den();
    } else if (psi.node) {
      const Weight omega = Weight::fundamental(*psi.node, rs.rank);
      const Rat m = rs.max_root_pairing(omega);
      Rat lim = bilinear(lambda, omega, rs) / m;
      grade_cap = lim.num() / lim.den();
    }

    const int k = (int)psi.roots.size();
    std::vector<int> q(rs.rank, 0);  // root coords of lambda - mu so far
    std::function<void(int, int)> rec = [&](int idx, int grade) {
      if (idx == k) {
        Weight mu = lambda;
        for (int j = 0; j < rs.rank; ++j) {
          int acc = 0;
          for (int i = 0; i < rs.rank; ++i) acc += rs.cartan(j, i) * q[i];
          mu.c[j] -= acc;
        }
        if (mu.is_dominant()) found.insert(GammaNode{mu, grade});
        return;
      }
      const RootVec& beta = psi.roots[idx];
      int count = 0;
      for (;; ++count) {
        bool in_box = true;
        for (int j = 0; j < rs.rank && in_box; ++j)
          if (q[j] > box[j]) in_box = false;
        if (!in_box || (grade_cap && grade + count > *grade_cap)) break;
        rec(idx + 1, grade + count);
        for (int j = 0; j < rs.rank; ++j) q[j] += beta.c[j];
      }
      for (int j = 0; j < rs.rank; ++j) q[j] -= (count)*beta.c[j];
    };
    rec(0, 0);
  }

  g.nodes.assign(found.begin(), found.end());

  // cover edges between consecutive grades
  for (int i = 0; i < (int)g.nodes.size(); ++i) {
    for (int j = i + 1; j < (int)g.nodes.size(); ++j) {
      if (g.nodes[j].grade != g.nodes[i].grade + 1) continue;
      Weight diff = g.nodes[j].mu - g.nodes[i].mu;
      if (diff.is_zero()) {
        g.covers.emplace_back(i, j);
        continue;
      }
      auto rc = rs.weight_to_root_coords(diff);
      if (rc && rs.is_root(*rc)) g.covers.emplace_back(i, j);
    }
  }
  return g;
}

namespace {

struct StepTable {
  std::vector<Weight> deltas;  // weights of R u {0}
  int theta_height = 1;
};

StepTable step_table(const RootSystem& rs) {
  StepTable t;
  t.deltas.push_back(Weight::zero(rs.rank));
  for (const RootVec& r : rs.positive_roots) {
    t.deltas.push_back(rs.root_to_weight(r));
    t.deltas.push_back(rs.root_to_weight(-r));
  }
  t.theta_height = rs.theta.height();
  return t;
}

// Necessary condition for "target - v is a sum of at most `steps` elements
// of R u {0}": lattice membership and height/coordinate bounds.
bool may_reach(const Weight& v, const Weight& target, int steps,
               const RootSystem& rs, int theta_height) {
  if (steps < 0) return false;
  Weight diff = target - v;
  if (diff.is_zero()) return true;
  if (steps == 0) return false;
  auto rc = rs.weight_to_root_coords(diff);
  if (!rc) return false;
  int ht = 0;
  for (int j = 0; j < rs.rank; ++j) {
    if (std::abs(rc->c[j]) > 2 * steps) return false;
    ht += rc->c[j];
  }
  return std::abs(ht) <= steps * theta_height;
}

}  // namespace

bool leq(const GammaNode& a, const GammaNode& b, const RootSystem& rs) {
  if (a.grade > b.grade) return false;
  if (a.grade == b.grade) return a.mu == b.mu;
  if (!a.mu.is_dominant() || !b.mu.is_dominant()) return false;
  const StepTable steps = step_table(rs);
  const int total = b.grade - a.grade;
  if (!may_reach(a.mu, b.mu, total, rs, steps.theta_height)) return false;

  std::set<Weight> frontier{a.mu};
  for (int g = 0; g < total; ++g) {
    std::set<Weight> next;
    const int remaining = total - g - 1;
    for (const Weight& mu : frontier) {
      for (const Weight& d : steps.deltas) {
        Weight nu = mu + d;
        if (!nu.is_dominant()) continue;
        if (!may_reach(nu, b.mu, remaining, rs, steps.theta_height)) continue;
        next.insert(std::move(nu));
      }
    }
    if (next.empty()) return false;
    frontier = std::move(next);
  }
  return frontier.count(b.mu) > 0;
}

bool is_interval_closed(const GammaPoset& gamma, const RootSystem& rs) {
  if (gamma.nodes.empty()) return true;
  const StepTable steps = step_table(rs);
  const int top = gamma.max_grade();

  // Window: dominant weights reachable from the base or any Gamma node,
  // pruned by the possibility of still reaching some Gamma node above.
  auto can_serve = [&](const Weight& v, int grade) {
    for (const GammaNode& b : gamma.nodes)
      if (b.grade >= grade &&
          may_reach(v, b.mu, b.grade - grade, rs, steps.theta_height))
        return true;
    return false;
  };

  std::vector<std::set<Weight>> level(top + 1);
  level[gamma.base.grade].insert(gamma.base.mu);
  for (const GammaNode& n : gamma.nodes)
    if (n.grade <= top) level[n.grade].insert(n.mu);
  for (int g = 0; g < top; ++g) {
    for (const Weight& mu : level[g]) {
      for (const Weight& d : steps.deltas) {
        Weight nu = mu + d;
        if (!nu.is_dominant()) continue;
        if (!can_serve(nu, g + 1)) continue;
        level[g + 1].insert(std::move(nu));
      }
    }
  }

  // index nodes
  std::map<GammaNode, int> id;
  std::vector<GammaNode> all;
  for (int g = 0; g <= top; ++g)
    for (const Weight& mu : level[g]) {
      id[GammaNode{mu, g}] = (int)all.size();
      all.push_back(GammaNode{mu, g});
    }
  const int n = (int)all.size();
  const int words = (n + 63) / 64;
  std::vector<std::vector<uint64_t>> reach(n, std::vector<uint64_t>(words, 0));
  auto set_bit = [&](std::vector<uint64_t>& bs, int i) {
    bs[i >> 6] |= (uint64_t)1 << (i & 63);
  };
  auto get_bit = [&](const std::vector<uint64_t>& bs, int i) {
    return (bs[i >> 6] >> (i & 63)) & 1;
  };
  // process from the top grade down: reach[v] = {v} + union over covers
  for (int i = n - 1; i >= 0; --i) {
    set_bit(reach[i], i);
    const GammaNode& v = all[i];
    if (v.grade == top) continue;
    for (const Weight& d : steps.deltas) {
      Weight nu = v.mu + d;
      if (!nu.is_dominant()) continue;
      auto it = id.find(GammaNode{nu, v.grade + 1});
      if (it == id.end()) continue;
      const std::vector<uint64_t>& src = reach[it->second];
      std::vector<uint64_t>& dst = reach[i];
      for (int w = 0; w < words; ++w) dst[w] |= src[w];
    }
  }

  // ids of Gamma members inside the window
  std::vector<int> gamma_ids;
  std::vector<char> in_gamma(n, 0);
  for (const GammaNode& g : gamma.nodes) {
    auto it = id.find(g);
    if (it == id.end()) return false;  // not even reachable from the base
    gamma_ids.push_back(it->second);
    in_gamma[it->second] = 1;
  }

  for (int ai : gamma_ids) {
    for (int bi : gamma_ids) {
      if (ai == bi || !get_bit(reach[ai], bi)) continue;
      // every c with ai -> c -> bi must be in Gamma
      for (int c = 0; c < n; ++c) {
        if (!get_bit(reach[ai], c) || !get_bit(reach[c], bi)) continue;
        if (!in_gamma[c]) return false;
      }
    }
  }
  return true;
}

RigidityReport rigidity_check(const PsiSet& psi, const RootSystem& rs, int bound) {
  RigidityReport rep;
  if (psi.empty() || bound <= 0) return rep;
  if (bound > 7) throw std::invalid_argument("rigidity_check: bound too large");

  std::vector<RootVec> all_roots;
  for (const RootVec& r : rs.positive_roots) {
    all_roots.push_back(r);
    all_roots.push_back(-r);
  }
  std::set<std::vector<int>> psi_set;
  for (const RootVec& r : psi.roots) psi_set.insert(r.c);

  // For each achievable sum: which sizes occur (bit k <-> size k+1), and for
  // which sizes some representation uses a root outside Psi.
  struct SumInfo {
    uint8_t exists_mask = 0;
    uint8_t off_mask = 0;
  };
  auto key_of = [&](const std::vector<int>& v) {
    std::string k(v.size(), '\0');
    for (size_t j = 0; j < v.size(); ++j) k[j] = (char)(v[j] + 100);
    return k;
  };
  std::unordered_map<std::string, SumInfo> sums;

  std::vector<int> acc(rs.rank, 0);
  std::function<void(int, int, bool)> rec = [&](int start, int size, bool off) {
    if (size > 0) {
      SumInfo& info = sums[key_of(acc)];
      info.exists_mask |= (uint8_t)(1 << (size - 1));
      if (off) info.off_mask |= (uint8_t)(1 << (size - 1));
    }
    if (size == bound) return;
    for (int i = start; i < (int)all_roots.size(); ++i) {
      for (int j = 0; j < rs.rank; ++j) acc[j] += all_roots[i].c[j];
      rec(i, size + 1, off || !psi_set.count(all_roots[i].c));
      for (int j = 0; j < rs.rank; ++j) acc[j] -= all_roots[i].c[j];
    }
  };
  rec(0, 0, false);

  // Recover one concrete representation for the failure message.
  std::function<bool(std::vector<int>&, int, int, bool, bool,
                     std::vector<int>&)>
      witness = [&](std::vector<int>& target, int start, int size, bool need_off,
                    bool off, std::vector<int>& out) -> bool {
    if (size == 0) {
      bool zero = std::all_of(target.begin(), target.end(),
                              [](int x) { return x == 0; });
      return zero && (!need_off || off);
    }
    for (int i = start; i < (int)all_roots.size(); ++i) {
      for (int j = 0; j < rs.rank; ++j) target[j] -= all_roots[i].c[j];
      out.push_back(i);
      if (witness(target, i, size - 1, need_off,
                  off || !psi_set.count(all_roots[i].c), out))
        return true;
      out.pop_back();
      for (int j = 0; j < rs.rank; ++j) target[j] += all_roots[i].c[j];
    }
    return false;
  };
  auto describe = [&](const std::vector<int>& v, int size, bool need_off) {
    std::vector<int> target = v;
    std::vector<int> idx;
    witness(target, 0, size, need_off, false, idx);
    std::string s;
    for (size_t i = 0; i < idx.size(); ++i) {
      if (i) s += " + ";
      s += "(" + all_roots[idx[i]].str() + ")";
    }
    return s;
  };

  // enumerate Z+-combinations of Psi with at most `bound` summands
  std::vector<int> psum(rs.rank, 0);
  std::function<bool(int, int)> check = [&](int start, int size) {
    if (size > 0) {
      auto it = sums.find(key_of(psum));
      if (it != sums.end()) {
        const uint8_t shorter = (uint8_t)((1 << (size - 1)) - 1);
        if (it->second.exists_mask & shorter) {
          int k = 1;
          while (!(it->second.exists_mask & (1 << (k - 1)))) ++k;
          rep.ok = false;
          rep.violation = "sum of " + std::to_string(size) +
                          " Psi elements also written with " + std::to_string(k) +
                          " roots: " + describe(psum, k, false);
          return false;
        }
        if (it->second.off_mask & (1 << (size - 1))) {
          rep.ok = false;
          rep.violation = "equal-length representation uses a root outside Psi: " +
                          describe(psum, size, true);
          return false;
        }
      }
    }
    if (size == bound) return true;
    for (size_t i = start; i < psi.roots.size(); ++i) {
      for (int j = 0; j < rs.rank; ++j) psum[j] += psi.roots[i].c[j];
      bool go = check((int)i, size + 1);
      for (int j = 0; j < rs.rank; ++j) psum[j] -= psi.roots[i].c[j];
      if (!go) return false;
    }
    return true;
  };
  check(0, 0);
  return rep;
}

std::string to_dot(const GammaPoset& gamma) {
  std::ostringstream os;
  os << "digraph gamma {\n  rankdir=BT;\n";
  for (size_t i = 0; i < gamma.nodes.size(); ++i)
    os << "  n" << i << " [label=\"(" << gamma.nodes[i].mu.str() << "), r="
       << gamma.nodes[i].grade << "\"];\n";
  for (const auto& [lo, hi] : gamma.covers)
    os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_json_string(const GammaPoset& gamma) {
  nlohmann::json j;
  j["base"] = {{"mu", gamma.base.mu.c}, {"r", gamma.base.grade}};
  j["psi"] = nlohmann::json::array();
  for (const RootVec& r : gamma.psi.roots) j["psi"].push_back(r.c);
  j["psi_origin"] = gamma.psi.origin_str();
  j["nodes"] = nlohmann::json::array();
  for (const GammaNode& n : gamma.nodes)
    j["nodes"].push_back({{"mu", n.mu.c}, {"r", n.grade}});
  j["covers"] = nlohmann::json::array();
  for (const auto& [lo, hi] : gamma.covers)
    j["covers"].push_back({lo, hi});
  return j.dump(2);
}

}  // namespace krc
