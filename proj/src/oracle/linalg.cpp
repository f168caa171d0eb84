#include "monobrick/oracle/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace monobrick::oracle {

PrimeField::PrimeField(int p) : p_(p) {
  if (p != 2 && p != 3 && p != 5 && p != 7) {
    throw std::invalid_argument("unsupported characteristic " + std::to_string(p));
  }
  inverse_.assign(static_cast<std::size_t>(p), 0);
  for (int a = 1; a < p; ++a) {
    for (int b = 1; b < p; ++b) {
      if ((a * b) % p == 1) inverse_[static_cast<std::size_t>(a)] = b;
    }
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](int x) { return x == 0; });
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows(), b.cols());
  const int p = f.characteristic();
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      int acc = 0;
      for (int k = 0; k < a.cols(); ++k) acc += a.at(r, k) * b.at(k, c);
      out.at(r, c) = acc % p;
    }
  }
  return out;
}

std::vector<int> row_reduce(const PrimeField& f, Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int found = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m.at(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(found, c));
    }
    const int scale = f.inv(m.at(row, col));
    for (int c = col; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), scale);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const int factor = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) {
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const PrimeField& f, Matrix m) {
  return static_cast<int>(row_reduce(f, m).size());
}

std::vector<std::vector<int>> nullspace(const PrimeField& f, Matrix m) {
  const auto pivots = row_reduce(f, m);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<int> v(static_cast<std::size_t>(m.cols()), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = f.neg(m.at(static_cast<int>(r), free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> Subspace::reduce(const PrimeField& f, std::vector<int> v) const {
  for (int r = 0; r < basis.rows(); ++r) {
    const int coeff = v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])];
    if (coeff == 0) continue;
    for (int c = 0; c < ambient; ++c) {
      v[static_cast<std::size_t>(c)] = f.sub(v[static_cast<std::size_t>(c)], f.mul(coeff, basis.at(r, c)));
    }
  }
  return v;
}

std::vector<int> Subspace::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < ambient; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) out.push_back(c);
  }
  return out;
}

void for_each_vector(const PrimeField& f, int d,
                     const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> v(static_cast<std::size_t>(d), 0);
  const int p = f.characteristic();
  while (true) {
    fn(v);
    int k = 0;
    while (k < d && ++v[static_cast<std::size_t>(k)] == p) v[static_cast<std::size_t>(k++)] = 0;
    if (k == d) return;
  }
}

std::vector<Subspace> all_subspaces(const PrimeField& f, int d) {
  std::vector<Subspace> out;
  for (int k = 0; k <= d; ++k) {
    // choose pivot columns, then fill the free entries right of each pivot
    std::vector<int> pivots(static_cast<std::size_t>(k));
    auto choose = [&](auto& self, int idx, int from) -> void {
      if (idx == k) {
        std::vector<std::pair<int, int>> slots;
        for (int r = 0; r < k; ++r) {
          for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < d; ++c) {
            if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) slots.emplace_back(r, c);
          }
        }
        for_each_vector(f, static_cast<int>(slots.size()), [&](const std::vector<int>& vals) {
          Subspace s{d, Matrix(k, d), pivots};
          for (int r = 0; r < k; ++r) s.basis.at(r, pivots[static_cast<std::size_t>(r)]) = 1;
          for (std::size_t x = 0; x < slots.size(); ++x) s.basis.at(slots[x].first, slots[x].second) = vals[x];
          out.push_back(std::move(s));
        });
        return;
      }
      for (int c = from; c < d; ++c) {
        pivots[static_cast<std::size_t>(idx)] = c;
        self(self, idx + 1, c + 1);
      }
    };
    choose(choose, 0, 0);
  }
  return out;
}

}  // namespace monobrick::oracle
