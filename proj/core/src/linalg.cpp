#include "derkit/linalg.hpp"

namespace derkit {

std::vector<int> DenseMatrix::rref() {
  const Field& F = field_;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int pr = -1;
    for (int i = r; i < rows_; ++i) {
      if (!F.is_zero(at(i, c))) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
    }
    Coeff inv = F.inv(at(r, c));
    for (int j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), inv);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || F.is_zero(at(i, c))) continue;
      Coeff f = at(i, c);
      for (int j = c; j < cols_; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int DenseMatrix::rank() const {
  DenseMatrix copy = *this;
  return (int)copy.rref().size();
}

std::vector<std::vector<Coeff>> DenseMatrix::kernel() const {
  const Field& F = field_;
  DenseMatrix m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Coeff>> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Coeff> v(cols_, F.zero());
    v[c] = F.one();
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
      v[pivots[pr]] = F.neg(m.at((int)pr, c));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool DenseMatrix::row_space_contains(const std::vector<Coeff>& v) const {
  const Field& F = field_;
  DenseMatrix m(F, rows_ + 1, cols_);
  m.a_ = a_;
  m.a_.resize((size_t)(rows_ + 1) * cols_, F.zero());
  for (int j = 0; j < cols_; ++j) m.at(rows_, j) = v[j];
  DenseMatrix base = *this;
  return m.rank() == base.rank();
}

}  // namespace derkit
