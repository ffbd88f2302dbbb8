// Dense exact-rational matrices and Gaussian elimination.

#ifndef SEMICONV_LINALG_HPP_
#define SEMICONV_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "semiconv/error.hpp"
#include "semiconv/rational.hpp"

namespace semiconv {

  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    Rational& operator()(std::size_t i, std::size_t j) {
      return a_[i * cols_ + j];
    }
    Rational const& operator()(std::size_t i, std::size_t j) const {
      return a_[i * cols_ + j];
    }

    Matrix transpose() const {
      Matrix t(cols_, rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    friend Matrix operator*(Matrix const& x, Matrix const& y) {
      Matrix   out(x.rows_, y.cols_);
      Rational t;
      for (std::size_t i = 0; i < x.rows_; ++i) {
        for (std::size_t k = 0; k < x.cols_; ++k) {
          if (sgn(x(i, k)) == 0) {
            continue;
          }
          for (std::size_t j = 0; j < y.cols_; ++j) {
            if (sgn(y(k, j)) == 0) {
              continue;
            }
            mpq_mul(t.get_mpq_t(), x(i, k).get_mpq_t(), y(k, j).get_mpq_t());
            out(i, j) += t;
          }
        }
      }
      return out;
    }

    friend Matrix operator-(Matrix x, Matrix const& y) {
      for (std::size_t i = 0; i < x.a_.size(); ++i) {
        x.a_[i] -= y.a_[i];
      }
      return x;
    }

    friend bool operator==(Matrix const&, Matrix const&) = default;

   private:
    std::size_t           rows_ = 0;
    std::size_t           cols_ = 0;
    std::vector<Rational> a_;
  };

  // Row vector times matrix.
  inline std::vector<Rational> row_times(std::vector<Rational> const& v,
                                         Matrix const&                m) {
    std::vector<Rational> out(m.cols(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (sgn(v[i]) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out[j] += v[i] * m(i, j);
      }
    }
    return out;
  }

  struct RowEchelon {
    Matrix                   reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  };

  // Reduced row echelon form.
  inline RowEchelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t              row = 0;
    Rational                 f, t;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
      std::size_t p = row;
      while (p < m.rows() && sgn(m(p, col)) == 0) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      if (p != row) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          std::swap(m(p, j), m(row, j));
        }
      }
      Rational const inv = 1 / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(row, j) *= inv;
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == row || sgn(m(i, col)) == 0) {
          continue;
        }
        f = m(i, col);
        for (std::size_t j = col; j < m.cols(); ++j) {
          if (sgn(m(row, j)) != 0) {
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), m(row, j).get_mpq_t());
            m(i, j) -= t;
          }
        }
      }
      pivots.push_back(col);
      ++row;
    }
    return {std::move(m), std::move(pivots)};
  }

  inline std::size_t rank(Matrix const& m) {
    return rref(m).pivots.size();
  }

  // Columns form a basis of { v : m v = 0 }.
  inline Matrix nullspace(Matrix const& m) {
    RowEchelon const         e = rref(m);
    std::vector<bool>        is_pivot(m.cols(), false);
    for (auto c : e.pivots) {
      is_pivot[c] = true;
    }
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_pivot[c]) {
        free.push_back(c);
      }
    }
    Matrix basis(m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      basis(free[k], k) = 1;
      for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        basis(e.pivots[r], k) = -e.reduced(r, free[k]);
      }
    }
    return basis;
  }

  // Independent columns of m spanning its column space.
  inline Matrix column_space(Matrix const& m) {
    RowEchelon const e = rref(m);
    Matrix           out(m.rows(), e.pivots.size());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        out(i, k) = m(i, e.pivots[k]);
      }
    }
    return out;
  }

  // Solution X of A X = B for square nonsingular A.
  inline Matrix solve(Matrix const& A, Matrix const& B) {
    if (A.rows() != A.cols() || A.rows() != B.rows()) {
      throw SingularDecomposition("solve: dimension mismatch");
    }
    std::size_t const n = A.rows();
    Matrix            aug(n, n + B.cols());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) = A(i, j);
      }
      for (std::size_t j = 0; j < B.cols(); ++j) {
        aug(i, n + j) = B(i, j);
      }
    }
    RowEchelon const e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) {
      throw SingularDecomposition("solve: matrix is singular");
    }
    Matrix X(n, B.cols());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < B.cols(); ++j) {
        X(i, j) = e.reduced(i, n + j);
      }
    }
    return X;
  }

  // Solution set of A x = b: a particular solution and a nullspace basis,
  // or nullopt when inconsistent.
  struct AffineSolution {
    std::vector<Rational> particular;
    Matrix                homogeneous;
  };

  inline std::optional<AffineSolution>
  solve_affine(Matrix const& A, std::vector<Rational> const& b) {
    Matrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
      for (std::size_t j = 0; j < A.cols(); ++j) {
        aug(i, j) = A(i, j);
      }
      aug(i, A.cols()) = b[i];
    }
    RowEchelon const e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == A.cols()) {
      return std::nullopt;
    }
    std::vector<Rational> x(A.cols(), Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      x[e.pivots[r]] = e.reduced(r, A.cols());
    }
    return AffineSolution{std::move(x), nullspace(A)};
  }

}  // namespace semiconv

#endif  // SEMICONV_LINALG_HPP_
