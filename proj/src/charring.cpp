#include "krchar/charring.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "krchar/cache.hpp"

namespace krc {

void DominantCharacter::add(const Weight& w, long long mult) {
  if (mult == 0) return;
  auto it = mult_.find(w);
  if (it == mult_.end()) {
    mult_.emplace(w, mult);
  } else {
    it->second += mult;
    if (it->second == 0) mult_.erase(it);
  }
}

long long DominantCharacter::at(const Weight& w) const {
  auto it = mult_.find(w);
  return it == mult_.end() ? 0 : it->second;
}

DominantCharacter& DominantCharacter::operator+=(const DominantCharacter& o) {
  for (const auto& [w, m] : o.mult_) add(w, m);
  return *this;
}

DominantCharacter& DominantCharacter::operator-=(const DominantCharacter& o) {
  for (const auto& [w, m] : o.mult_) add(w, -m);
  return *this;
}

DominantCharacter DominantCharacter::operator*(long long k) const {
  DominantCharacter out;
  if (k == 0) return out;
  for (const auto& [w, m] : mult_) out.mult_.emplace(w, m * k);
  return out;
}

long long DominantCharacter::dim(const RootSystem& rs) const {
  long long total = 0;
  for (const auto& [w, m] : mult_) total += m * weyl_dim(w, rs);
  return total;
}

std::string DominantCharacter::str() const {
  if (mult_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : mult_) {
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << "-";
    long long a = m < 0 ? -m : m;
    if (a != 1) os << a << " ";
    os << "V(" << w.str() << ")";
    first = false;
  }
  return os.str();
}

long long FormalCharacter::mult_at(const Weight& v, const RootSystem& rs) const {
  Weight d = to_dominant(v, rs);
  auto it = dom_.find(d);
  return it == dom_.end() ? 0 : it->second;
}

long long FormalCharacter::dim(const RootSystem& rs) const {
  long long total = 0;
  for (const auto& [w, m] : dom_) total += m * weyl_orbit_size(w, rs);
  return total;
}

long long FormalCharacter::support_size(const RootSystem& rs) const {
  long long total = 0;
  for (const auto& [w, m] : dom_) total += weyl_orbit_size(w, rs);
  return total;
}

void FormalCharacter::for_each_weight(
    const RootSystem& rs,
    const std::function<void(const Weight&, long long)>& fn) const {
  for (const auto& [w, m] : dom_)
    for (const Weight& v : weyl_orbit(w, rs)) fn(v, m);
}

std::unordered_map<Weight, long long, WeightHash> FormalCharacter::full_expansion(
    const RootSystem& rs) const {
  std::unordered_map<Weight, long long, WeightHash> out;
  for_each_weight(rs, [&](const Weight& v, long long m) { out[v] += m; });
  return out;
}

void GradedCharacter::add(int degree, const Weight& w, long long mult) {
  layers[degree].add(w, mult);
  if (layers[degree].is_zero()) layers.erase(degree);
}

void GradedCharacter::add_layer(int degree, const DominantCharacter& d) {
  layers[degree] += d;
  if (layers[degree].is_zero()) layers.erase(degree);
}

bool GradedCharacter::is_zero() const { return layers.empty(); }

GradedCharacter& GradedCharacter::operator-=(const GradedCharacter& o) {
  for (const auto& [deg, d] : o.layers) {
    layers[deg] -= d;
    if (layers[deg].is_zero()) layers.erase(deg);
  }
  return *this;
}

bool operator==(const GradedCharacter& a, const GradedCharacter& b) {
  return a.layers == b.layers;
}

std::string GradedCharacter::str() const {
  if (layers.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, d] : layers) {
    if (!first) os << " + ";
    if (deg == 0) os << "[" << d.str() << "]";
    else os << "t^" << deg << " [" << d.str() << "]";
    first = false;
  }
  return os.str();
}

namespace {

struct CharMemo {
  std::mutex mu;
  std::map<std::pair<std::string, Weight>, FormalCharacter> simple;
  std::map<std::tuple<std::string, Weight, Weight>, DominantCharacter> tensor;
};

CharMemo& memo() {
  static CharMemo m;
  return m;
}

std::map<Weight, long long> freudenthal(const Weight& lambda,
                                        const RootSystem& rs) {
  std::vector<Weight> doms = dominant_weights_below(lambda, rs);
  std::vector<Weight> pos_w;
  pos_w.reserve(rs.positive_roots.size());
  for (const RootVec& a : rs.positive_roots) pos_w.push_back(rs.root_to_weight(a));

  std::map<Weight, long long> mult;
  mult[lambda] = 1;
  const Rat top = bilinear(lambda + rs.rho, lambda + rs.rho, rs);
  for (size_t idx = 1; idx < doms.size(); ++idx) {
    const Weight& mu = doms[idx];
    Rat num(0);
    for (size_t ai = 0; ai < rs.positive_roots.size(); ++ai) {
      const RootVec& alpha = rs.positive_roots[ai];
      const Weight& alpha_w = pos_w[ai];
      Weight v = mu;
      for (int k = 1;; ++k) {
        v = v + alpha_w;
        auto it = mult.find(to_dominant(v, rs));
        if (it == mult.end()) break;
        num += Rat(2) * bilinear(v, alpha, rs) * Rat(it->second);
      }
    }
    const Rat den = top - bilinear(mu + rs.rho, mu + rs.rho, rs);
    const Rat m = num / den;
    if (!m.is_integer() || m.integer() <= 0)
      throw std::logic_error("freudenthal produced a non-positive multiplicity");
    mult[mu] = m.integer();
  }
  return mult;
}

using WeightMap = std::unordered_map<Weight, long long, WeightHash>;

WeightMap expansion_of(const DominantCharacter& m, const RootSystem& rs) {
  WeightMap out;
  for (const auto& [kappa, mult] : m.terms()) {
    if (mult < 0)
      throw std::invalid_argument("expected an actual character, got negative multiplicity");
    simple_character(kappa, rs).for_each_weight(
        rs, [&](const Weight& v, long long mv) { out[v] += mult * mv; });
  }
  return out;
}

WeightMap convolve(const WeightMap& a, const WeightMap& b) {
  WeightMap out;
  for (const auto& [va, ma] : a)
    for (const auto& [vb, mb] : b) {
      long long m = ma * mb;
      if (m) out[va + vb] += m;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

WeightMap adams(const WeightMap& w, int k) {
  WeightMap out;
  for (const auto& [v, m] : w) out[v * k] += m;
  return out;
}

enum class PowerKind { Exterior, Symmetric };

DominantCharacter power_character(const DominantCharacter& m, int s,
                                  const RootSystem& rs, PowerKind kind) {
  if (s < 0) throw std::invalid_argument("negative power");
  if (s == 0) return DominantCharacter::one(rs.rank);
  if (s == 1) return m;
  WeightMap base = expansion_of(m, rs);
  std::vector<WeightMap> pk(s + 1);
  for (int k = 1; k <= s; ++k) pk[k] = adams(base, k);
  std::vector<WeightMap> acc(s + 1);
  acc[0][Weight::zero(rs.rank)] = 1;
  for (int j = 1; j <= s; ++j) {
    WeightMap sum;
    for (int k = 1; k <= j; ++k) {
      long long sign = (kind == PowerKind::Exterior && k % 2 == 0) ? -1 : 1;
      WeightMap term = convolve(acc[j - k], pk[k]);
      for (const auto& [v, c] : term) sum[v] += sign * c;
    }
    WeightMap& out = acc[j];
    for (const auto& [v, c] : sum) {
      if (c == 0) continue;
      if (c % j != 0) throw std::logic_error("newton recursion not divisible");
      out[v] = c / j;
    }
  }
  return decompose_weight_function(acc[s], rs);
}

}  // namespace

const FormalCharacter& simple_character(const Weight& lambda,
                                        const RootSystem& rs) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("simple_character: weight not dominant");
  if (lambda.rank() != rs.rank)
    throw std::invalid_argument("simple_character: dim mismatch");
  CharMemo& m = memo();
  const auto key = std::make_pair(rs.type.str(), lambda);
  {
    std::lock_guard<std::mutex> lock(m.mu);
    auto it = m.simple.find(key);
    if (it != m.simple.end()) return it->second;
  }
  std::map<Weight, long long> dom;
  bool cached = false;
  if (cache_enabled()) {
    auto hit = persistent_lookup(rs.type.str(), "simple", lambda.str(), rs.rank);
    if (hit) {
      dom = std::move(*hit);
      cached = true;
    }
  }
  if (!cached) {
    dom = freudenthal(lambda, rs);
    if (cache_enabled())
      persistent_store(rs.type.str(), "simple", lambda.str(), dom);
  }
  std::lock_guard<std::mutex> lock(m.mu);
  auto [it, inserted] =
      m.simple.emplace(key, FormalCharacter(rs.type, std::move(dom)));
  return it->second;
}

long long weyl_dim(const Weight& lambda, const RootSystem& rs) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("weyl_dim: weight not dominant");
  // collect 4*(lambda+rho, alpha) / 4*(rho, alpha) and cancel factor lists
  std::vector<long long> nums, dens;
  const Weight lr = lambda + rs.rho;
  for (const RootVec& a : rs.positive_roots) {
    Rat n = Rat(4) * bilinear(lr, a, rs);
    Rat d = Rat(4) * bilinear(rs.rho, a, rs);
    nums.push_back(n.integer());
    dens.push_back(d.integer());
  }
  for (long long& d : dens) {
    for (long long& n : nums) {
      if (d == 1) break;
      long long g = std::gcd(d, n);
      d /= g;
      n /= g;
    }
    if (d != 1) throw std::logic_error("weyl_dim: product not integral");
  }
  __int128 prod = 1;
  for (long long n : nums) {
    prod *= n;
    if (prod > (__int128)0x7fffffffffffffffLL)
      throw std::overflow_error("weyl_dim: dimension exceeds 64 bits");
  }
  return (long long)prod;
}

namespace {

// Decomposition of V(a) (x) V(b) by signed reflections over the weights of
// the smaller factor.
DominantCharacter tensor_simple_pair(const Weight& a, const Weight& b,
                                     const RootSystem& rs) {
  const Weight *iter = &b, *high = &a;
  if (weyl_dim(a, rs) < weyl_dim(b, rs)) std::swap(iter, high);
  DominantCharacter out;
  simple_character(*iter, rs).for_each_weight(rs, [&](const Weight& v, long long m) {
    auto [dom, sign] = to_dominant_signed(*high + v + rs.rho, rs);
    if (sign != 0) out.add(dom - rs.rho, sign * m);
  });
  return out;
}

}  // namespace

DominantCharacter tensor_multiplicity(const DominantCharacter& m,
                                      const Weight& lambda,
                                      const RootSystem& rs) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("tensor_multiplicity: weight not dominant");
  DominantCharacter out;
  for (const auto& [kappa, mult] : m.terms()) {
    Weight lo = kappa, hi = lambda;
    if (hi < lo) std::swap(lo, hi);
    const auto key = std::make_tuple(rs.type.str(), lo, hi);
    CharMemo& mm = memo();
    {
      std::lock_guard<std::mutex> lock(mm.mu);
      auto it = mm.tensor.find(key);
      if (it != mm.tensor.end()) {
        out += it->second * mult;
        continue;
      }
    }
    DominantCharacter prod;
    bool cached = false;
    if (cache_enabled()) {
      auto hit = persistent_lookup(rs.type.str(), "tensor",
                                   lo.str() + "|" + hi.str(), rs.rank);
      if (hit) {
        for (const auto& [w, v] : *hit) prod.add(w, v);
        cached = true;
      }
    }
    if (!cached) {
      prod = tensor_simple_pair(lo, hi, rs);
      if (cache_enabled()) {
        std::map<Weight, long long> val(prod.terms().begin(), prod.terms().end());
        persistent_store(rs.type.str(), "tensor", lo.str() + "|" + hi.str(), val);
      }
    }
    {
      std::lock_guard<std::mutex> lock(mm.mu);
      mm.tensor.emplace(key, prod);
    }
    out += prod * mult;
  }
  return out;
}

DominantCharacter tensor_product(const DominantCharacter& a,
                                 const DominantCharacter& b,
                                 const RootSystem& rs) {
  const DominantCharacter *outer = &a, *inner = &b;
  if (a.size() < b.size()) std::swap(outer, inner);
  DominantCharacter out;
  for (const auto& [kappa, mult] : inner->terms())
    out += tensor_multiplicity(*outer, kappa, rs) * mult;
  return out;
}

DominantCharacter exterior_power(const DominantCharacter& m, int s,
                                 const RootSystem& rs) {
  return power_character(m, s, rs, PowerKind::Exterior);
}

DominantCharacter symmetric_power(const DominantCharacter& m, int s,
                                  const RootSystem& rs) {
  return power_character(m, s, rs, PowerKind::Symmetric);
}

DominantCharacter graded_specialize(const GradedCharacter& g) {
  DominantCharacter out;
  for (const auto& [deg, d] : g.layers) out += d;
  return out;
}

DominantCharacter decompose_weight_function(
    const std::unordered_map<Weight, long long, WeightHash>& f,
    const RootSystem& rs) {
  DominantCharacter out;
  for (const auto& [v, m] : f) {
    if (m == 0) continue;
    auto [dom, sign] = to_dominant_signed(v + rs.rho, rs);
    if (sign != 0) out.add(dom - rs.rho, sign * m);
  }
  return out;
}

void clear_character_memo() {
  CharMemo& m = memo();
  std::lock_guard<std::mutex> lock(m.mu);
  m.simple.clear();
  m.tensor.clear();
}

}  // namespace krc
