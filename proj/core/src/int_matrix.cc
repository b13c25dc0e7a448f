#include "twistcert/int_matrix.h"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <iomanip>
#include <limits>
#include <sstream>

#include "twistcert/error.h"

namespace twistcert {

namespace mp = boost::multiprecision;

namespace {

std::int64_t narrow(const mp::cpp_int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw ArithmeticOverflow();
  }
  return static_cast<std::int64_t>(v);
}

std::vector<mp::cpp_int> widen(const IntMatrix& m) {
  std::vector<mp::cpp_int> out(m.dim() * m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out[i * m.dim() + j] = m(i, j);
  }
  return out;
}

// Fraction-free Gaussian elimination (Bareiss); a is destroyed.
mp::cpp_int bareiss_det(std::vector<mp::cpp_int> a, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  mp::cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : dim_(rows.size()) {
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionMismatch("IntMatrix rows must form a square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const std::int64_t> entries) {
  IntMatrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t = checked_add(t, (*this)(i, i));
  return t;
}

std::int64_t IntMatrix::det() const { return narrow(bareiss_det(widen(*this), dim_)); }

bool IntMatrix::is_identity() const { return *this == identity(dim_); }

IntMatrix IntMatrix::inverse() const {
  // Over Z the inverse exists iff det = +-1; then it is det * adjugate, and
  // Gauss-Jordan over the rationals lands on integers.
  const std::int64_t d = det();
  if (d != 1 && d != -1) {
    throw Error("matrix with determinant " + std::to_string(d) + " has no integral inverse");
  }
  const std::size_t n = dim_;
  std::vector<mp::cpp_rational> a(n * 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = (*this)(i, j);
    a[i * 2 * n + n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (a[pivot * 2 * n + col] == 0) ++pivot;
    if (pivot != col) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a[pivot * 2 * n + j], a[col * 2 * n + j]);
    }
    const mp::cpp_rational p = a[col * 2 * n + col];
    for (std::size_t j = 0; j < 2 * n; ++j) a[col * 2 * n + j] /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i * 2 * n + col] == 0) continue;
      const mp::cpp_rational f = a[i * 2 * n + col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i * 2 * n + j] -= f * a[col * 2 * n + j];
    }
  }
  IntMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const mp::cpp_rational& v = a[i * 2 * n + n + j];
      if (mp::denominator(v) != 1) throw Error("non-integral inverse entry");
      inv(i, j) = narrow(mp::numerator(v));
    }
  }
  return inv;
}

IntMatrix IntMatrix::pow(long n) const {
  IntMatrix base = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  IntMatrix result = identity(dim_);
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntMatrix IntMatrix::block(std::size_t first, std::size_t size) const {
  if (first + size > dim_) throw DimensionMismatch("block exceeds matrix");
  IntMatrix b(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) b(i, j) = (*this)(first + i, first + j);
  }
  return b;
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != dim_) throw DimensionMismatch("vector length differs from matrix dimension");
  std::vector<std::int64_t> out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::size_t width = 1;
  for (std::int64_t e : entries_) width = std::max(width, std::to_string(e).size());
  std::ostringstream out;
  for (std::size_t i = 0; i < dim_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < dim_; ++j) {
      out << (j ? " " : "") << std::setw(static_cast<int>(width)) << (*this)(i, j);
    }
    out << "]\n";
  }
  return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("matrix product of different dimensions");
  const std::size_t n = a.dim_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        c(i, j) = checked_add(c(i, j), checked_mul(aik, b(k, j)));
      }
    }
  }
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix m(a.dim_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    m.entries_[i] = checked_mul(a.entries_[i], -1);
  }
  return m;
}

}  // namespace twistcert
