#pragma once

/**
 * @file linalg.hpp
 * @brief Exact dense linear algebra over Q(zeta_N).
 *
 * Everything here is Gaussian elimination in one form or another. Pivots are
 * the first nonzero entry in column order and subspaces are kept in reduced
 * row echelon form, so every reported basis is deterministic.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contra/cyclotomic.hpp"
#include "contra/polynomial.hpp"

namespace contra {

using Vector = std::vector<Cyclotomic>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = Cyclotomic(1);
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] += b[i];
  }
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] -= b[i];
  }
  return a;
}

inline Vector operator*(const Cyclotomic& s, Vector v) {
  for (auto& c : v) {
    if (!c.is_zero()) c = s * c;
  }
  return v;
}

/// a += s * b
inline void axpy(Vector& a, const Cyclotomic& s, const Vector& b) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] += s * b[i];
  }
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data size mismatch");
    unify_order();
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Cyclotomic>& data() const { return data_; }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Cyclotomic& c) { return c.is_zero(); });
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const auto& m = (*this)(r, c);
        if (!m.is_zero()) out[r] += m * v[c];
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const auto& bkj = b(k, j);
          if (!bkj.is_zero()) out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const Cyclotomic& s, Matrix m) {
    for (auto& c : m.data_) {
      if (!c.is_zero()) c = s * c;
    }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix pow(unsigned k) const {
    if (!is_square()) throw std::invalid_argument("power of a non-square matrix");
    Matrix result = identity(rows_);
    for (unsigned i = 0; i < k; ++i) result = result * (*this);
    return result;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  void unify_order() {
    int order = 1;
    for (const auto& c : data_) order = std::lcm(order, c.order());
    for (auto& c : data_) c = c.embed(order);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclotomic> data_;
};

/**
 * Incrementally built reduced row echelon basis of a row space.
 *
 * Every stored row has a leading 1 at its pivot column and zeros at all other
 * pivots. Rows are kept sorted by pivot.
 */
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection onto the span along the pivot coordinates.
  Vector reduce(Vector v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Cyclotomic c = v[pivots_[r]];
      if (!c.is_zero()) axpy(v, -c, rows_[r]);
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(Vector v) {
    v = reduce(std::move(v));
    std::size_t pivot = 0;
    while (pivot < width_ && v[pivot].is_zero()) ++pivot;
    if (pivot == width_) return false;
    const Cyclotomic inv = v[pivot].inverse();
    for (auto& c : v) {
      if (!c.is_zero()) c *= inv;
    }
    for (auto& row : rows_) {
      const Cyclotomic c = row[pivot];
      if (!c.is_zero()) axpy(row, -c, v);
    }
    const auto pos = static_cast<std::ptrdiff_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
    pivots_.insert(pivots_.begin() + pos, pivot);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
  }

  /// Null space of the row space: vectors orthogonal (under the plain dot product) to every row.
  std::vector<Vector> null_space() const {
    std::vector<bool> is_pivot(width_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < width_; ++f) {
      if (is_pivot[f]) continue;
      Vector v(width_);
      v[f] = Cyclotomic(1);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (!rows_[r][f].is_zero()) v[pivots_[r]] = -rows_[r][f];
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void check(const Vector& v) const {
    if (v.size() != width_) throw std::invalid_argument("row length does not match echelon width");
  }

  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// A subspace of k^n held as a canonical reduced echelon basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : echelon_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) s.echelon_.insert(v);
    return s;
  }

  static Subspace whole(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) s.echelon_.insert(unit_vector(ambient_dim, i));
    return s;
  }

  std::size_t ambient_dim() const { return echelon_.width(); }
  std::size_t dim() const { return echelon_.rank(); }
  const std::vector<Vector>& basis() const { return echelon_.rows(); }
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots(); }

  bool contains(const Vector& v) const { return echelon_.contains(v); }
  bool add(const Vector& v) { return echelon_.insert(v); }

  bool contains(const Subspace& other) const {
    return std::all_of(other.basis().begin(), other.basis().end(),
                       [this](const Vector& v) { return contains(v); });
  }

  /// Coordinates of a member vector with respect to basis(); read off at the pivots.
  Vector coordinates(const Vector& v) const {
    if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
    Vector c(dim());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots()[r]];
    return c;
  }

  /// ambient_dim x dim matrix whose columns are the basis vectors.
  Matrix basis_matrix() const { return Matrix::from_columns(ambient_dim(), basis()); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis() == b.basis();
  }

 private:
  RowEchelon echelon_;
};

/// Asserted after every kernel computation.
inline void check_rank_nullity(std::size_t rank, std::size_t nullity, std::size_t cols) {
  if (rank + nullity != cols) {
    throw std::logic_error("rank-nullity violated: " + std::to_string(rank) + " + " + std::to_string(nullity) +
                           " != " + std::to_string(cols));
  }
}

/// Kernel of the matrix whose rows are pushed into `rows`; width is the column count.
inline Subspace kernel_from_rows(const RowEchelon& rows) {
  auto basis = rows.null_space();
  check_rank_nullity(rows.rank(), basis.size(), rows.width());
  return Subspace::span(rows.width(), basis);
}

inline RowEchelon row_space(const Matrix& m) {
  RowEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (ech.rank() == m.cols()) break;
    ech.insert(m.row(r));
  }
  return ech;
}

inline Subspace kernel(const Matrix& m) { return kernel_from_rows(row_space(m)); }

inline std::size_t rank(const Matrix& m) { return row_space(m).rank(); }

inline Subspace column_space(const Matrix& m) { return Subspace::span(m.rows(), [&] {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return cols;
}()); }

/// Some x with m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  RowEchelon ech(m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row(r);
    row.push_back(b[r]);
    ech.insert(std::move(row));
  }
  Vector x(m.cols());
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    const std::size_t p = ech.pivots()[r];
    if (p == m.cols()) return std::nullopt;
    // free variables are zero, so the pivot variable equals the augmented entry
    x[p] = ech.rows()[r][m.cols()];
  }
  return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RowEchelon ech(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = m.row(r);
    row.resize(2 * n);
    row[n + r] = Cyclotomic(1);
    ech.insert(std::move(row));
  }
  if (ech.rank() < n || (n > 0 && ech.pivots()[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.rows()[r][n + c];
  return inv;
}

/**
 * Minimal polynomial via the first linear dependence among I, M, M^2, ...
 *
 * Each power is flattened and reduced against the earlier ones; a tail of
 * unit coordinates records the combination that produced each reduced row.
 */
inline Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t body = n * n;
  const std::size_t max_degree = n;
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    Vector v(body + max_degree + 1);
    std::copy(power.data().begin(), power.data().end(), v.begin());
    v[body + k] = Cyclotomic(1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Cyclotomic c = v[pivots[r]];
      if (!c.is_zero()) axpy(v, -c, rows[r]);
    }
    std::size_t pivot = 0;
    while (pivot < body && v[pivot].is_zero()) ++pivot;
    if (pivot == body) {
      std::vector<Cyclotomic> coeffs(v.begin() + static_cast<std::ptrdiff_t>(body),
                                     v.begin() + static_cast<std::ptrdiff_t>(body + k + 1));
      return Polynomial(std::move(coeffs)).monic();
    }
    const Cyclotomic inv = v[pivot].inverse();
    for (auto& c : v) {
      if (!c.is_zero()) c *= inv;
    }
    rows.push_back(std::move(v));
    pivots.push_back(pivot);
    power = power * m;
  }
  throw std::logic_error("minimal polynomial exceeded the Cayley-Hamilton bound");
}

inline Matrix evaluate(const Polynomial& p, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    acc = acc * m + p.coefficients()[k] * Matrix::identity(n);
  }
  return acc;
}

struct Eigenspace {
  Cyclotomic eigenvalue;
  Subspace space;
};

struct EigenSplit {
  std::vector<Eigenspace> spaces;
  bool complete = false;
};

/// ker(M - lambda I) for each candidate lambda with a nonzero kernel.
inline EigenSplit eigensplit(const Matrix& m, const std::vector<Cyclotomic>& candidates) {
  if (!m.is_square()) throw std::invalid_argument("eigensplit of a non-square matrix");
  EigenSplit out;
  std::size_t total = 0;
  for (const auto& lambda : candidates) {
    const bool seen = std::any_of(out.spaces.begin(), out.spaces.end(),
                                  [&](const Eigenspace& e) { return e.eigenvalue == lambda; });
    if (seen) continue;
    Subspace k = kernel(m - lambda * Matrix::identity(m.rows()));
    if (k.dim() == 0) continue;
    total += k.dim();
    out.spaces.push_back({lambda, std::move(k)});
  }
  out.complete = total == m.rows();
  return out;
}

/// Diagonalizable over the algebraic closure: the minimal polynomial is squarefree.
inline bool is_diagonalizable(const Matrix& m) { return is_squarefree(minimal_polynomial(m)); }

inline json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline json to_json(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  return json{{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

inline json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
  return json{{"coeffs", coeffs}, {"text", p.to_string()}};
}

inline Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be a JSON array");
  Vector v;
  for (const auto& c : j) v.push_back(cyclotomic_from_json(c));
  return v;
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw std::invalid_argument("matrix must be an array of " + std::to_string(rows) + " rows");
  }
  std::vector<Cyclotomic> data;
  for (const auto& row : j) {
    Vector v = vector_from_json(row);
    if (v.size() != cols) throw std::invalid_argument("matrix row must have " + std::to_string(cols) + " entries");
    data.insert(data.end(), v.begin(), v.end());
  }
  return Matrix(rows, cols, std::move(data));
}

}  // namespace contra
