#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "oscoh/number_field.hpp"
#include "oscoh/rational.hpp"

namespace oscoh {

/// Dense row-major matrix of exact entries.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    assert(data_.size() == rows_ * cols_);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using NumberFieldMatrix = Matrix<NumberFieldElement>;
/// Residues in [0, p); the modulus travels separately.
using ModMatrix = Matrix<std::uint64_t>;

template <class T>
Matrix<T> identity_matrix(std::size_t n, const T& zero, const T& one) {
  Matrix<T> m(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

}  // namespace oscoh
