#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hfk {

// Expression templates off: results of arithmetic are plain values.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

using IntVec = std::vector<Int>;

// Dense integer matrix, row major.
class ZMatrix {
 public:
  ZMatrix() = default;
  ZMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static ZMatrix identity(std::size_t n);
  static ZMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  IntVec column(std::size_t j) const;
  IntVec row(std::size_t i) const;
  IntVec mul(const IntVec& v) const;
  ZMatrix mul(const ZMatrix& b) const;
  ZMatrix transpose() const;

  // Stack rows of b below this matrix (same column count).
  ZMatrix vstack(const ZMatrix& b) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row i += k * row j
  void add_row(std::size_t i, std::size_t j, const Int& k);
  void add_col(std::size_t i, std::size_t j, const Int& k);

  bool operator==(const ZMatrix& o) const = default;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_0 | d_1 | ... , d_i >= 0.
struct SmithForm {
  ZMatrix U, V;
  IntVec diag;  // length min(rows, cols)
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const ZMatrix& a);

// Integer basis of {x : A x = 0}, as columns.
std::vector<IntVec> integer_kernel(const ZMatrix& a);

// One integer solution of A x = b using a precomputed Smith form of A.
std::optional<IntVec> solve_integer(const SmithForm& s, const IntVec& b);

Int gcd_of(const IntVec& v);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace hfk
