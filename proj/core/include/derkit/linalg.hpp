#pragma once

#include <vector>

#include "derkit/scalar.hpp"

namespace derkit {

/// Dense matrix over an exact field, for graded-piece computations and the
/// brute-force oracles in the test suite.
class DenseMatrix {
 public:
  DenseMatrix(const Field& f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), a_((size_t)rows * cols, f.zero()) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Coeff& at(int r, int c) { return a_[(size_t)r * cols_ + c]; }
  const Coeff& at(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

  /// Row-reduce in place; returns pivot columns.
  std::vector<int> rref();
  int rank() const;
  /// Basis of the right kernel {v : Av = 0}.
  std::vector<std::vector<Coeff>> kernel() const;
  /// Is v in the row space?
  bool row_space_contains(const std::vector<Coeff>& v) const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<Coeff> a_;
};

}  // namespace derkit
