#include "krchar/rational.hpp"

#include <ostream>

namespace krc {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

namespace {

// Divide a row by the gcd of its entries' numerators after clearing
// denominators; keeps elimination entries from growing.
void primitivize_row(RatMatrix& m, int row, int from_col) {
  long long lcm = 1;
  for (int j = from_col; j < m.cols(); ++j) {
    long long den = m(row, j).den();
    lcm = lcm / std::gcd(lcm, den) * den;
    if (lcm > (1LL << 40)) return;  // give up normalizing, stay exact
  }
  long long g = 0;
  for (int j = from_col; j < m.cols(); ++j) {
    Rat v = m(row, j) * Rat(lcm);
    g = std::gcd(g, v.num() < 0 ? -v.num() : v.num());
  }
  if (g == 0) return;
  Rat scale = Rat(lcm, g);
  for (int j = from_col; j < m.cols(); ++j) m(row, j) *= scale;
}

}  // namespace

int rank_exact(RatMatrix m) {
  const int rows = (int)m.rows(), cols = (int)m.cols();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    primitivize_row(m, rank, col);
    const Rat p = m(rank, col);
    for (int r = rank + 1; r < rows; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rat factor = m(r, col) / p;
      for (int j = col; j < cols; ++j) m(r, j) -= factor * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

int kernel_dim_exact(const RatMatrix& stacked) {
  return (int)stacked.cols() - rank_exact(stacked);
}

}  // namespace krc
