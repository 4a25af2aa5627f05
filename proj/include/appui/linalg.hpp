#pragma once

// Exact rational linear algebra: reduced row-echelon spans and null spaces.

#include <boost/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace appui {

using Rational = boost::rational<std::int64_t>;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

// Boost's mixed int/rational comparisons recurse on some versions, so
// zero tests go through the numerator.
inline bool is_zero(const Rational& x) { return x.numerator() == 0; }
inline bool nonzero(const Rational& x) { return x.numerator() != 0; }

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
}

inline std::optional<std::size_t> leading_index(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (nonzero(v[i])) return i;
  return std::nullopt;
}

/// Incrementally maintained row space in reduced row-echelon form.
///
/// Rows are kept sorted by pivot column with unit pivots and zeros above and
/// below each pivot, so two Spans over the same ambient dimension are equal
/// exactly when they represent the same subspace.
class Span {
 public:
  Span() = default;
  explicit Span(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const Matrix& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after elimination against the current rows; zero iff v
  /// lies in the span.
  Vector reduce(Vector v) const {
    check_size(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational c = v[pivots_[r]];
      if (is_zero(c)) continue;
      const Vector& row = rows_[r];
      for (std::size_t i = pivots_[r]; i < ambient_; ++i)
        if (nonzero(row[i])) v[i] -= c * row[i];
    }
    return v;
  }

  bool contains(const Vector& v) const { return is_zero(reduce(v)); }

  /// Adds v to the span. Returns true if the dimension grew.
  bool add(const Vector& v) {
    Vector rem = reduce(v);
    auto lead = leading_index(rem);
    if (!lead) return false;
    const std::size_t p = *lead;
    const Rational inv = Rational(1) / rem[p];
    for (auto& x : rem) x *= inv;
    for (auto& row : rows_) {
      const Rational c = row[p];
      if (is_zero(c)) continue;
      for (std::size_t i = p; i < ambient_; ++i)
        if (nonzero(rem[i])) row[i] -= c * rem[i];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto offset = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + offset, std::move(rem));
    return true;
  }

  bool contains(const Span& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [this](const Vector& r) { return contains(r); });
  }

  bool operator==(const Span& other) const {
    return ambient_ == other.ambient_ && rows_ == other.rows_;
  }

 private:
  void check_size(const Vector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Span: vector has wrong length");
  }

  std::size_t ambient_ = 0;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

inline Span span_of(std::size_t ambient, const Matrix& rows) {
  Span s(ambient);
  for (const auto& r : rows) s.add(r);
  return s;
}

inline std::size_t rank(std::size_t ambient, const Matrix& rows) {
  return span_of(ambient, rows).dim();
}

/// Basis of {c : sum_i c_i * columns[i] = 0}, where the columns are given as
/// vectors of a common length.
inline Matrix null_space(const Matrix& columns) {
  const std::size_t n = columns.size();
  if (n == 0) return {};
  const std::size_t m = columns.front().size();
  // Row-reduce the m x n matrix whose i-th column is columns[i].
  Matrix a(m, Vector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) a[i][j] = columns[j][i];

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && is_zero(a[sel][col])) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || is_zero(a[i][col])) continue;
      const Rational c = a[i][col];
      for (std::size_t k = col; k < n; ++k) a[i][k] -= c * a[row][k];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  Matrix basis;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace appui
