#include "leibniz/linalg.hpp"

#include <algorithm>

namespace leibniz {

namespace {

void require_field(const FieldSpec& expected, const Scalar& s) {
  if (!(s.field() == expected)) {
    throw Error(ErrorKind::FieldMismatch, "entry over " + s.field().name() +
                                              " in a matrix over " + expected.name());
  }
}

void require_ambient(const Subspace& a, const Subspace& b) {
  if (!(a.field() == b.field()) || a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
  }
}

}  // namespace

Vector zero_vector(const FieldSpec& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
  auto v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

Vector scale(const Scalar& s, std::span<const Scalar> v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(s * x);
  return out;
}

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {}

Matrix::Matrix(FieldSpec f, const std::vector<std::vector<Scalar>>& grid)
    : field_(f), rows_(grid.size()), cols_(grid.empty() ? 0 : grid.front().size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : grid) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (const auto& s : r) {
      require_field(f, s);
      entries_.push_back(s);
    }
  }
}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(FieldSpec f, const std::vector<std::vector<std::int64_t>>& grid) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : grid) {
    auto& out = rows.emplace_back();
    for (auto v : r) out.push_back(Scalar::from_int(f, v));
  }
  return Matrix(f, rows);
}

Matrix Matrix::from_columns(FieldSpec f, const std::vector<Vector>& cols) {
  const std::size_t n = cols.empty() ? 0 : cols.front().size();
  Matrix m(f, n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw Error(ErrorKind::DimensionMismatch, "ragged columns");
    for (std::size_t i = 0; i < n; ++i) {
      require_field(f, cols[j][i]);
      m(i, j) = cols[j][i];
    }
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length != cols");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!x[c].is_zero()) out[r] += (*this)(r, c) * x[c];
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
  if (auto c = a.rows() <=> b.rows(); c != 0) return c;
  if (auto c = a.cols() <=> b.cols(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries().begin(), a.entries().end(),
                                                b.entries().begin(), b.entries().end());
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "matrix fields differ");
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "matrix fields differ");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < r.cols() && lead < r.rows(); ++c) {
    std::size_t sel = lead;
    while (sel < r.rows() && r(sel, c).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(sel, j), r(lead, j));
    }
    const auto inv = inverse(r(lead, c));
    for (std::size_t j = c; j < r.cols(); ++j) r(lead, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead || r(i, c).is_zero()) continue;
      const auto factor = r(i, c);
      for (std::size_t j = c; j < r.cols(); ++j) r(i, j) -= factor * r(lead, j);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(r), pivots.size(), std::move(pivots)};
}

Scalar det(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
  Matrix a = m;
  const auto n = a.rows();
  Scalar result = Scalar::one(a.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && a(sel, c).is_zero()) ++sel;
    if (sel == n) return Scalar::zero(a.field());
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
      result = -result;
    }
    result *= a(c, c);
    const auto inv = inverse(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const auto factor = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
    }
  }
  return result;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
  const auto n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  auto [r, rank, pivots] = rref(aug);
  if (rank < n || pivots[n - 1] != n - 1) {
    throw Error(ErrorKind::Degenerate, "matrix is singular");
  }
  Matrix out(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  }
  return out;
}

Subspace Subspace::zero(FieldSpec f, std::size_t ambient_dim) { return Subspace(f, ambient_dim); }

Subspace Subspace::whole(FieldSpec f, std::size_t ambient_dim) {
  return row_space(Matrix::identity(f, ambient_dim));
}

Subspace Subspace::span(FieldSpec f, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Matrix m(f, vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) {
      throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient dimension");
    }
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      require_field(f, vectors[i][j]);
      m(i, j) = vectors[i][j];
    }
  }
  return row_space(m);
}

Subspace Subspace::row_space(const Matrix& m) {
  auto [r, rank, pivots] = rref(m);
  Subspace s(m.field(), m.cols());
  for (std::size_t i = 0; i < rank; ++i) s.basis_.emplace_back(r.row(i).begin(), r.row(i).end());
  s.pivots_ = std::move(pivots);
  return s;
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) out.push_back(c);
  }
  return out;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length mismatch");
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const auto factor = r[pivots_[i]];
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= factor * basis_[i][j];
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_ambient(*this, other);
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Subspace kernel(const Matrix& m) {
  auto [r, rank, pivots] = rref(m);
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    auto v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t i = 0; i < rank; ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), basis);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  auto vectors = a.basis();
  vectors.insert(vectors.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient_dim(), vectors);
}

namespace {

// Rows spanning the annihilator of s: s is exactly the kernel of this matrix.
std::vector<Vector> constraints(const Subspace& s) {
  Matrix basis(s.field(), s.dim(), s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.ambient_dim(); ++j) basis(i, j) = s.basis()[i][j];
  }
  return kernel(basis).basis();
}

}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  auto rows = constraints(a);
  const auto more = constraints(b);
  rows.insert(rows.end(), more.begin(), more.end());
  Matrix system(a.field(), rows.size(), a.ambient_dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) system(i, j) = rows[i][j];
  }
  return kernel(system);
}

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim() || !(m.field() == s.field())) {
    throw Error(ErrorKind::AmbientMismatch, "map and subspace do not match");
  }
  std::vector<Vector> vectors;
  for (const auto& v : s.basis()) vectors.push_back(m.apply(v));
  return Subspace::span(m.field(), m.rows(), vectors);
}

}  // namespace leibniz
