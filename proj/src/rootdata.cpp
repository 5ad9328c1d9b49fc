#include "krchar/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace krc {

char family_letter(Family f) {
  switch (f) {
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  throw std::logic_error("bad family");
}

LieType LieType::make(Family f, int rank) {
  switch (f) {
    case Family::B:
    case Family::C:
      if (rank < 2) throw std::invalid_argument("rank out of range for family");
      break;
    case Family::D:
      if (rank < 4)
        throw std::invalid_argument(
            "rank out of range for family (D needs rank >= 4)");
      break;
  }
  return LieType{f, rank};
}

LieType LieType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad type string: " + s);
  Family f;
  switch (std::toupper((unsigned char)s[0])) {
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    default: throw std::invalid_argument("bad type string: " + s);
  }
  int rank = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit((unsigned char)s[i]))
      throw std::invalid_argument("bad type string: " + s);
    rank = rank * 10 + (s[i] - '0');
  }
  return make(f, rank);
}

std::string LieType::str() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

Weight Weight::fundamental(int i, int rank) {
  if (i < 1 || i > rank) throw std::invalid_argument("fundamental index");
  Weight w = zero(rank);
  w.c[i - 1] = 1;
  return w;
}

Weight Weight::parse(const std::string& s, int rank) {
  std::vector<int> coords;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    while (pos < tok.size() && std::isspace((unsigned char)tok[pos])) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad weight: " + s);
    coords.push_back(v);
  }
  if ((int)coords.size() != rank)
    throw std::invalid_argument("weight length " + std::to_string(coords.size()) +
                                " does not match rank " + std::to_string(rank));
  return Weight(std::move(coords));
}

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

std::string Weight::str() const {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("weight dim mismatch");
  Weight r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("weight dim mismatch");
  Weight r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

Weight Weight::operator*(int k) const {
  Weight r = *this;
  for (int& x : r.c) x *= k;
  return r;
}

int RootVec::height() const {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

bool operator<(const RootVec& a, const RootVec& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.c < b.c;
}

RootVec operator+(const RootVec& a, const RootVec& b) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("root dim mismatch");
  RootVec r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

RootVec operator-(const RootVec& a, const RootVec& b) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("root dim mismatch");
  RootVec r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

RootVec RootVec::operator-() const {
  RootVec r = *this;
  for (int& x : r.c) x = -x;
  return r;
}

std::string RootVec::str() const {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

namespace {

Eigen::MatrixXi make_cartan(LieType t) {
  const int n = t.rank;
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](int i, int j) { a(i, j) = -1; a(j, i) = -1; };
  switch (t.family) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // short root row
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // short root row
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
  }
  return a;
}

std::vector<Rat> make_d(LieType t) {
  const int n = t.rank;
  std::vector<Rat> d(n, Rat(1));
  switch (t.family) {
    case Family::B: d[n - 1] = Rat(1, 2); break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) d[i] = Rat(1, 2);
      break;
    case Family::D: break;
  }
  return d;
}

RatMatrix invert(const Eigen::MatrixXi& a) {
  const int n = (int)a.rows();
  RatMatrix m(n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j) = Rat(a(i, j));
      m(i, n + j) = Rat(i == j ? 1 : 0);
    }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) throw std::logic_error("cartan matrix singular");
    if (pivot != col) m.row(pivot).swap(m.row(col));
    const Rat p = m(col, col);
    for (int j = 0; j < 2 * n; ++j) m(col, j) /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const Rat f = m(r, col);
      for (int j = 0; j < 2 * n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return m.rightCols(n);
}

}  // namespace

RootSystem::RootSystem(LieType t) : type(t), rank(t.rank) {
  cartan = make_cartan(t);
  d = make_d(t);
  cartan_inv = invert(cartan);
  rho = Weight(std::vector<int>(rank, 1));

  // Closure from the simple roots: r + a_i is a root iff p - <r, a_i^vee> > 0
  // where p is the largest k with r - k a_i still a root.
  std::set<std::vector<int>> have;
  std::vector<RootVec> frontier;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    have.insert(c);
    frontier.push_back(RootVec(c));
  }
  positive_roots = frontier;
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const RootVec& r : frontier) {
      for (int i = 0; i < rank; ++i) {
        std::vector<int> cand = r.c;
        cand[i] += 1;
        if (have.count(cand)) continue;
        int pairing = 0;
        for (int j = 0; j < rank; ++j) pairing += cartan(i, j) * r.c[j];
        int p = 0;
        {
          std::vector<int> down = r.c;
          for (;;) {
            down[i] -= 1;
            bool zero = std::all_of(down.begin(), down.end(),
                                    [](int x) { return x == 0; });
            if (zero || !have.count(down)) break;
            ++p;
          }
        }
        if (p - pairing > 0) {
          have.insert(cand);
          next.push_back(RootVec(cand));
          positive_roots.push_back(next.back());
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(positive_roots.begin(), positive_roots.end());

  theta = positive_roots.back();
  if (positive_roots.size() > 1 &&
      positive_roots[positive_roots.size() - 2].height() == theta.height())
    throw std::logic_error("highest root not unique");

  for (const RootVec& r : positive_roots) {
    root_index_.push_back(r.c);
    std::vector<int> neg = r.c;
    for (int& x : neg) x = -x;
    root_index_.push_back(std::move(neg));
  }
  std::sort(root_index_.begin(), root_index_.end());
}

RootSystem build_root_system(LieType t) { return RootSystem(t); }

Weight RootSystem::root_to_weight(const RootVec& r) const {
  if (r.rank() != rank) throw std::invalid_argument("root dim mismatch");
  Weight w = Weight::zero(rank);
  for (int i = 0; i < rank; ++i) {
    int acc = 0;
    for (int j = 0; j < rank; ++j) acc += cartan(i, j) * r.c[j];
    w.c[i] = acc;
  }
  return w;
}

std::optional<RootVec> RootSystem::weight_to_root_coords(const Weight& w) const {
  if (w.rank() != rank) throw std::invalid_argument("weight dim mismatch");
  RootVec out(std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    Rat acc(0);
    for (int j = 0; j < rank; ++j) acc += cartan_inv(i, j) * Rat(w.c[j]);
    if (!acc.is_integer()) return std::nullopt;
    out.c[i] = (int)acc.integer();
  }
  return out;
}

bool RootSystem::is_root(const RootVec& r) const {
  return std::binary_search(root_index_.begin(), root_index_.end(), r.c);
}

bool RootSystem::is_positive_root(const RootVec& r) const {
  if (!is_root(r)) return false;
  for (int x : r.c)
    if (x > 0) return true;
  return false;
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& lambda) const {
  auto diff = weight_to_root_coords(lambda - mu);
  if (!diff) return false;
  return std::all_of(diff->c.begin(), diff->c.end(), [](int x) { return x >= 0; });
}

Rat RootSystem::max_root_pairing(const Weight& xi) const {
  Rat best(0);
  bool first = true;
  for (const RootVec& r : positive_roots) {
    Rat v = bilinear(xi, r, *this);
    Rat a = v < Rat(0) ? -v : v;  // the max over R is attained at +/-r
    if (first || best < a) { best = a; first = false; }
  }
  return best;
}

Rat bilinear(const Weight& a, const RootVec& b, const RootSystem& rs) {
  if (a.rank() != rs.rank || b.rank() != rs.rank)
    throw std::invalid_argument("bilinear: dim mismatch");
  Rat acc(0);
  for (int i = 0; i < rs.rank; ++i)
    acc += Rat(b.c[i]) * rs.d[i] * Rat(a.c[i]);
  return acc;
}

Rat bilinear(const RootVec& a, const Weight& b, const RootSystem& rs) {
  return bilinear(b, a, rs);
}

Rat bilinear(const RootVec& a, const RootVec& b, const RootSystem& rs) {
  if (a.rank() != rs.rank || b.rank() != rs.rank)
    throw std::invalid_argument("bilinear: dim mismatch");
  Rat acc(0);
  for (int i = 0; i < rs.rank; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j) {
      if (b.c[j] == 0 || rs.cartan(i, j) == 0) continue;
      acc += Rat(a.c[i]) * Rat(b.c[j]) * rs.d[i] * Rat(rs.cartan(i, j));
    }
  }
  return acc;
}

Rat bilinear(const Weight& a, const Weight& b, const RootSystem& rs) {
  if (a.rank() != rs.rank || b.rank() != rs.rank)
    throw std::invalid_argument("bilinear: dim mismatch");
  Rat acc(0);
  for (int i = 0; i < rs.rank; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j) {
      if (b.c[j] == 0) continue;
      acc += Rat(a.c[i]) * Rat(b.c[j]) * rs.d[i] * rs.cartan_inv(i, j);
    }
  }
  return acc;
}

std::pair<Weight, int> to_dominant_signed(const Weight& v, const RootSystem& rs) {
  Weight w = v;
  int sign = 1;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (w.c[i] < 0) { neg = i; break; }
    if (neg < 0) break;
    const int coeff = w.c[neg];
    for (int j = 0; j < rs.rank; ++j) w.c[j] -= coeff * rs.cartan(j, neg);
    sign = -sign;
  }
  for (int i = 0; i < rs.rank; ++i)
    if (w.c[i] == 0) return {w, 0};
  return {w, sign};
}

Weight to_dominant(const Weight& v, const RootSystem& rs) {
  Weight w = v;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (w.c[i] < 0) { neg = i; break; }
    if (neg < 0) return w;
    const int coeff = w.c[neg];
    for (int j = 0; j < rs.rank; ++j) w.c[j] -= coeff * rs.cartan(j, neg);
  }
}

std::vector<int> epsilon_theta(LieType t) {
  return build_root_system(t).theta.c;
}

int i_lambda(const Weight& w) {
  for (int i = w.rank(); i >= 1; --i)
    if (w.c[i - 1] > 0) return i;
  return 0;
}

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

long long weyl_order(LieType t) {
  long long f = factorial(t.rank);
  long long p = 1;
  for (int i = 0; i < t.rank; ++i) p *= 2;
  if (t.family == Family::D) p /= 2;
  return f * p;
}

long long weyl_orbit_size(const Weight& dominant, const RootSystem& rs) {
  if (!dominant.is_dominant())
    throw std::invalid_argument("weyl_orbit_size: weight not dominant");
  const int n = rs.rank;
  std::vector<int> nodes;
  for (int i = 0; i < n; ++i)
    if (dominant.c[i] == 0) nodes.push_back(i);
  std::vector<char> seen(n, 0);
  long long stab = 1;
  for (int start : nodes) {
    if (seen[start]) continue;
    // connected component within the zero-coordinate sub-diagram
    std::vector<int> comp{start};
    seen[start] = 1;
    for (size_t k = 0; k < comp.size(); ++k) {
      for (int j : nodes) {
        if (seen[j] || rs.cartan(comp[k], j) == 0) continue;
        seen[j] = 1;
        comp.push_back(j);
      }
    }
    const int k = (int)comp.size();
    bool has_last = std::find(comp.begin(), comp.end(), n - 1) != comp.end();
    bool has_prev = std::find(comp.begin(), comp.end(), n - 2) != comp.end();
    long long order;
    if (rs.type.family != Family::D && has_last) {
      order = factorial(k);  // B_k / C_k
      for (int i = 0; i < k; ++i) order *= 2;
    } else if (rs.type.family == Family::D && has_last && has_prev) {
      order = factorial(k);  // D_k (includes D_2 = A_1 x A_1, D_3 = A_3)
      for (int i = 0; i < k - 1; ++i) order *= 2;
    } else {
      order = factorial(k + 1);  // A_k
    }
    stab *= order;
  }
  return weyl_order(rs.type) / stab;
}

std::vector<Weight> weyl_orbit(const Weight& dominant, const RootSystem& rs) {
  std::set<std::vector<int>> seen;
  std::vector<Weight> out;
  out.push_back(dominant);
  seen.insert(dominant.c);
  for (size_t k = 0; k < out.size(); ++k) {
    Weight w = out[k];
    for (int i = 0; i < rs.rank; ++i) {
      if (w.c[i] == 0) continue;
      Weight s = w;
      const int coeff = w.c[i];
      for (int j = 0; j < rs.rank; ++j) s.c[j] -= coeff * rs.cartan(j, i);
      if (seen.insert(s.c).second) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Weight> dominant_weights_below(const Weight& lambda,
                                           const RootSystem& rs) {
  const int n = rs.rank;
  if (lambda.rank() != n) throw std::invalid_argument("dim mismatch");

  // box bound: c_j <= (lambda, omega_j) / d_j
  std::vector<int> bound(n, 0);
  for (int j = 0; j < n; ++j) {
    Rat p(0);
    for (int k = 0; k < n; ++k)
      p += Rat(lambda.c[k]) * rs.d[k] * rs.cartan_inv(k, j);
    Rat lim = p / rs.d[j];
    long long b = lim.num() / lim.den();
    bound[j] = b < 0 ? -1 : (int)b;
  }

  // coordinate j of mu is final once every neighbor of j has been fixed
  std::vector<int> final_at(n, 0);
  for (int j = 0; j < n; ++j) {
    int last = j;
    for (int i = 0; i < n; ++i)
      if (rs.cartan(j, i) != 0) last = std::max(last, i);
    final_at[j] = last;
  }

  std::vector<std::pair<int, Weight>> found;  // (height, mu)
  std::vector<int> c(n, 0);
  Weight mu = lambda;
  // depth-first over simple-root coordinates of lambda - mu
  std::function<void(int, int)> rec = [&](int level, int height) {
    if (level == n) {
      found.emplace_back(height, mu);
      return;
    }
    for (c[level] = 0; c[level] <= bound[level]; ++c[level]) {
      if (c[level] > 0)
        for (int j = 0; j < n; ++j) mu.c[j] -= rs.cartan(j, level);
      bool ok = true;
      for (int j = 0; j <= level && ok; ++j)
        if (final_at[j] <= level && mu.c[j] < 0) ok = false;
      if (ok) rec(level + 1, height + c[level]);
    }
    for (int j = 0; j < n; ++j) mu.c[j] += bound[level] * rs.cartan(j, level);
    c[level] = 0;
  };
  rec(0, 0);

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second.c < b.second.c;
            });
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& p : found) out.push_back(std::move(p.second));
  return out;
}

}  // namespace krc
