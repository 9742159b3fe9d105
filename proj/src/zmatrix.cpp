#include "hfk/zmatrix.hpp"

#include <boost/integer/common_factor.hpp>

#include <utility>

namespace hfk {

ZMatrix ZMatrix::identity(std::size_t n) {
  ZMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ZMatrix ZMatrix::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
  ZMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

IntVec ZMatrix::column(std::size_t j) const {
  IntVec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntVec ZMatrix::row(std::size_t i) const {
  return IntVec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
}

IntVec ZMatrix::mul(const IntVec& v) const {
  IntVec out(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < c_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

ZMatrix ZMatrix::mul(const ZMatrix& b) const {
  ZMatrix out(r_, b.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Int& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

ZMatrix ZMatrix::transpose() const {
  ZMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ZMatrix ZMatrix::vstack(const ZMatrix& b) const {
  ZMatrix m(r_ + b.r_, c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < b.r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(r_ + i, j) = b(i, j);
  return m;
}

void ZMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void ZMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void ZMatrix::add_row(std::size_t i, std::size_t j, const Int& k) {
  if (k.is_zero()) return;
  for (std::size_t t = 0; t < c_; ++t)
    if (!(*this)(j, t).is_zero()) (*this)(i, t) += k * (*this)(j, t);
}

void ZMatrix::add_col(std::size_t i, std::size_t j, const Int& k) {
  if (k.is_zero()) return;
  for (std::size_t t = 0; t < r_; ++t)
    if (!(*this)(t, j).is_zero()) (*this)(t, i) += k * (*this)(t, j);
}

namespace {

// floor division toward -inf is not needed; truncating quotient keeps |remainder| < |pivot|.
Int quot(const Int& a, const Int& b) { return a / b; }

}  // namespace

SmithForm smith_normal_form(const ZMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  ZMatrix d = a;
  ZMatrix u = ZMatrix::identity(m);
  ZMatrix v = ZMatrix::identity(n);
  std::size_t t = 0;
  while (t < m && t < n) {
    // smallest nonzero entry of the trailing block
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!d(i, j).is_zero() && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t).is_zero()) continue;
        Int q = quot(d(i, t), d(t, t));
        d.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (!d(i, t).is_zero()) {
          d.swap_rows(t, i);
          u.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j).is_zero()) continue;
        Int q = quot(d(t, j), d(t, t));
        d.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (!d(t, j).is_zero()) {
          d.swap_cols(t, j);
          v.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility of the rest of the block
      for (std::size_t i = t + 1; i < m && clean; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!(d(i, j) % d(t, t)).is_zero()) {
            d.add_row(t, i, 1);
            u.add_row(t, i, 1);
            clean = false;
            break;
          }
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
    ++t;
  }
  SmithForm s;
  s.rank = t;
  s.diag.assign(std::min(m, n), Int(0));
  for (std::size_t i = 0; i < t; ++i) s.diag[i] = d(i, i);
  s.U = std::move(u);
  s.V = std::move(v);
  return s;
}

std::vector<IntVec> integer_kernel(const ZMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<IntVec> out;
  for (std::size_t j = s.rank; j < a.cols(); ++j) out.push_back(s.V.column(j));
  return out;
}

std::optional<IntVec> solve_integer(const SmithForm& s, const IntVec& b) {
  IntVec c = s.U.mul(b);
  const std::size_t n = s.V.rows();
  IntVec y(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (!(c[i] % s.diag[i]).is_zero()) return std::nullopt;
      y[i] = c[i] / s.diag[i];
    } else if (!c[i].is_zero()) {
      return std::nullopt;
    }
  }
  return s.V.mul(y);
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = boost::integer::gcd(g, abs(x));
  return g;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace hfk
