#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace twistcert {

// Overflow-checked helpers; throw ArithmeticOverflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Square matrix with exact 64-bit entries. Every operation checks for
// overflow; determinants and inverses go through arbitrary precision.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim);  // zero matrix
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t dim);
  static IntMatrix diagonal(std::span<const std::int64_t> entries);

  std::size_t dim() const { return dim_; }
  std::int64_t operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::int64_t& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  IntMatrix transpose() const;
  std::int64_t trace() const;
  std::int64_t det() const;
  bool is_identity() const;
  // Throws Error when det is not +-1.
  IntMatrix inverse() const;
  IntMatrix pow(long n) const;
  IntMatrix block(std::size_t first, std::size_t size) const;

  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;

  // Rows on separate lines, entries right aligned.
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> entries_;
};

}  // namespace twistcert
