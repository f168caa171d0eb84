#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace monobrick::oracle {

/// Arithmetic in F_p for a small prime p.
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is 2, 3, 5 or 7.
  explicit PrimeField(int p);

  [[nodiscard]] int characteristic() const noexcept { return p_; }
  [[nodiscard]] int add(int a, int b) const noexcept { return (a + b) % p_; }
  [[nodiscard]] int sub(int a, int b) const noexcept { return (a - b + p_) % p_; }
  [[nodiscard]] int mul(int a, int b) const noexcept { return (a * b) % p_; }
  [[nodiscard]] int neg(int a) const noexcept { return (p_ - a) % p_; }
  [[nodiscard]] int inv(int a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }

  friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

 private:
  int p_;
  std::vector<int> inverse_;
};

/// Dense row-major matrix with entries in [0, p).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}
  static Matrix identity(int n);

  [[nodiscard]] int rows() const noexcept { return rows_; }
  [[nodiscard]] int cols() const noexcept { return cols_; }
  [[nodiscard]] int& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  [[nodiscard]] int at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] const std::vector<int>& data() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

[[nodiscard]] Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);

/// Reduces `m` in place to reduced row echelon form; returns pivot columns.
std::vector<int> row_reduce(const PrimeField& f, Matrix& m);

[[nodiscard]] int rank(const PrimeField& f, Matrix m);

/// Basis of {x : m x = 0}, one vector per entry.
[[nodiscard]] std::vector<std::vector<int>> nullspace(const PrimeField& f, Matrix m);

/// A subspace of F_p^d held as the rows of its reduced row echelon basis.
struct Subspace {
  int ambient = 0;
  Matrix basis;             // dim x ambient, RREF
  std::vector<int> pivots;  // pivot column of each basis row

  [[nodiscard]] int dim() const noexcept { return basis.rows(); }
  /// v minus its projection along the pivots; zero iff v lies in the span.
  [[nodiscard]] std::vector<int> reduce(const PrimeField& f, std::vector<int> v) const;
  /// Columns that are not pivots; they index a complement basis.
  [[nodiscard]] std::vector<int> free_columns() const;
};

/// Every subspace of F_p^d, each exactly once, smallest dimension first.
[[nodiscard]] std::vector<Subspace> all_subspaces(const PrimeField& f, int d);

/// Calls `fn` with every coefficient vector in F_p^d (p^d calls).
void for_each_vector(const PrimeField& f, int d,
                     const std::function<void(const std::vector<int>&)>& fn);

}  // namespace monobrick::oracle
