#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidsym {

using Integer = boost::multiprecision::cpp_int;

/// Square matrix with arbitrary-precision integer entries, row-major.
class IntMatrix {
 public:
  /// The n x n zero matrix.
  explicit IntMatrix(std::size_t dim = 0);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t dim);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  Integer& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Integer& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  /// Lexicographic on (dim, entries); only meant for ordered containers.
  friend bool operator<(const IntMatrix& lhs, const IntMatrix& rhs);

 private:
  std::size_t dim_;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
IntMatrix operator-(const IntMatrix& m);

IntMatrix transpose(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

/// Exact inverse through the integer adjugate.  Throws NotUnimodular unless
/// det = +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// m^k; negative k uses the unimodular inverse.
IntMatrix power(const IntMatrix& m, long long k);

bool mat_equal(const IntMatrix& lhs, const IntMatrix& rhs);

/// `[[1,0],[0,1]]`: a JSON array of row arrays, integers written in full.
std::string to_json(const IntMatrix& m);
/// Inverse of to_json for entries that fit in a signed 64-bit integer.
IntMatrix matrix_from_json(std::string_view text);

/// Right-aligned columns, one row per line.
std::string format_matrix(const IntMatrix& m);

}  // namespace braidsym
