#include "braidsym/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "braidsym/error.hpp"

namespace braidsym {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw DimensionMismatch("matrix literal is not square");
    }
    std::size_t c = 0;
    for (long long v : row) {
      (*this)(r, c++) = v;
    }
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw DimensionMismatch("matrix rows do not form a square");
    }
    for (std::size_t c = 0; c < rows.size(); ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

bool operator<(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.dim_ != rhs.dim_) {
    return lhs.dim_ < rhs.dim_;
  }
  return std::lexicographical_compare(lhs.entries_.begin(), lhs.entries_.end(),
                                      rhs.entries_.begin(), rhs.entries_.end());
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw DimensionMismatch("matrix product of sizes " + std::to_string(lhs.dim()) + " and " +
                            std::to_string(rhs.dim()));
  }
  const std::size_t n = lhs.dim();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (lhs(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += lhs(i, k) * rhs(k, j);
      }
    }
  }
  return out;
}

IntMatrix operator-(const IntMatrix& m) {
  IntMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out(i, j) = -m(i, j);
    }
  }
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out(j, i) = m(i, j);
    }
  }
  return out;
}

// Bareiss fraction-free elimination; every division is exact.
Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) {
    return 1;
  }
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) {
        ++swap_row;
      }
      if (swap_row == n) {
        return 0;
      }
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(swap_row, j));
      }
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

IntMatrix minor_without(const IntMatrix& m, std::size_t row, std::size_t col) {
  IntMatrix out(m.dim() - 1);
  for (std::size_t i = 0, oi = 0; i < m.dim(); ++i) {
    if (i == row) {
      continue;
    }
    for (std::size_t j = 0, oj = 0; j < m.dim(); ++j) {
      if (j == col) {
        continue;
      }
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const Integer det = determinant(m);
  if (det != 1 && det != -1) {
    throw NotUnimodular("matrix has determinant " + det.str() + ", not +-1");
  }
  const std::size_t n = m.dim();
  IntMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Integer cofactor = determinant(minor_without(m, i, j));
        if ((i + j) % 2 == 1) {
          cofactor = -cofactor;
        }
        adj(j, i) = cofactor;
      }
    }
  }
  // det is +-1, so dividing by it is multiplying by it.
  if (det == -1) {
    return -adj;
  }
  return adj;
}

IntMatrix power(const IntMatrix& m, long long k) {
  IntMatrix base = k < 0 ? inverse_unimodular(m) : m;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  IntMatrix result = IntMatrix::identity(m.dim());
  while (e > 0) {
    if (e & 1U) {
      result = result * base;
    }
    e >>= 1U;
    if (e > 0) {
      base = base * base;
    }
  }
  return result;
}

bool mat_equal(const IntMatrix& lhs, const IntMatrix& rhs) { return lhs == rhs; }

std::string to_json(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += i == 0 ? "[" : ",[";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j > 0) {
        out += ',';
      }
      out += m(i, j).str();
    }
    out += ']';
  }
  out += ']';
  return out;
}

IntMatrix matrix_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) {
    throw MalformedInput("matrix JSON must be an array of rows");
  }
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) {
      throw MalformedInput("matrix JSON row is not an array");
    }
    auto& out = rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw MalformedInput("matrix JSON entry is not a 64-bit integer: " + v.dump());
      }
      if (v.is_number_unsigned()) {
        out.emplace_back(v.get<std::uint64_t>());
      } else {
        out.emplace_back(v.get<std::int64_t>());
      }
    }
  }
  return IntMatrix::from_rows(rows);
}

std::string format_matrix(const IntMatrix& m) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      width = std::max(width, m(i, j).str().size());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const std::string cell = m(i, j).str();
      out << (j == 0 ? "" : " ") << std::string(width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace braidsym
