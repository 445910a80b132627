#include "torhom/int_mat.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <sstream>

namespace torhom {

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

std::string rational_to_string(const Rat& r) {
  std::ostringstream os;
  os << num(r);
  if (den(r) != 1) os << "/" << den(r);
  return os.str();
}

RatVec mod1(const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = frac_mod1(v[i]);
  return out;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

Int common_denominator(const RatVec& v) {
  Int d = 1;
  for (const auto& r : v) d = lcm(d, den(r));
  return d;
}

IntMat::IntMat(std::size_t rows, std::size_t cols, std::initializer_list<Int> entries)
    : rows_(rows), cols_(cols), data_(entries) {
  if (data_.size() != rows * cols) throw std::invalid_argument("entry count mismatch");
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::diagonal(const std::vector<Int>& d) {
  IntMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMat IntMat::row_vector(const std::vector<Int>& v) {
  IntMat m(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
  return m;
}

IntMat IntMat::col_vector(const std::vector<Int>& v) {
  IntMat m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
  IntMat p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

IntMat IntMat::operator+(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in sum");
  IntMat s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
  return s;
}

IntMat IntMat::operator-(const IntMat& o) const { return *this + (-o); }

IntMat IntMat::operator-() const {
  IntMat s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = -data_[i];
  return s;
}

IntMat IntMat::scaled(const Int& c) const {
  IntMat s(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = c * data_[i];
  return s;
}

bool IntMat::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<Int> IntMat::row(std::size_t i) const {
  std::vector<Int> v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

std::vector<Int> IntMat::col(std::size_t j) const {
  std::vector<Int> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatVec IntMat::apply(const RatVec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("shape mismatch in apply");
  RatVec y(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) y[i] += Rat((*this)(i, j)) * x[j];
  return y;
}

IntMat IntMat::submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const {
  IntMat s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

IntMat IntMat::vstack(const IntMat& top, const IntMat& bottom) {
  if (top.rows_ == 0 && top.cols_ == 0) return bottom;
  if (bottom.rows_ == 0 && bottom.cols_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack width mismatch");
  IntMat m(top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t i = 0; i < top.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows_; ++i)
    for (std::size_t j = 0; j < top.cols_; ++j) m(top.rows_ + i, j) = bottom(i, j);
  return m;
}

IntMat IntMat::hstack(const IntMat& left, const IntMat& right) {
  if (left.rows_ == 0 && left.cols_ == 0) return right;
  if (right.rows_ == 0 && right.cols_ == 0) return left;
  if (left.rows_ != right.rows_) throw std::invalid_argument("hstack height mismatch");
  IntMat m(left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows_; ++i) {
    for (std::size_t j = 0; j < left.cols_; ++j) m(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, left.cols_ + j) = right(i, j);
  }
  return m;
}

IntMat IntMat::dsum(const IntMat& a, const IntMat& b) {
  IntMat m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
  return m;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

Int IntMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMat a = *this;
  Int prev = 1;
  Int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

BlockMat::BlockMat(std::vector<std::size_t> row_sizes, std::vector<std::size_t> col_sizes) {
  row_off_.resize(row_sizes.size() + 1, 0);
  col_off_.resize(col_sizes.size() + 1, 0);
  for (std::size_t i = 0; i < row_sizes.size(); ++i) row_off_[i + 1] = row_off_[i] + row_sizes[i];
  for (std::size_t j = 0; j < col_sizes.size(); ++j) col_off_[j + 1] = col_off_[j] + col_sizes[j];
  m_ = IntMat(row_off_.back(), col_off_.back());
}

void BlockMat::set(std::size_t bi, std::size_t bj, const IntMat& block) {
  if (block.rows() != row_off_[bi + 1] - row_off_[bi] ||
      block.cols() != col_off_[bj + 1] - col_off_[bj])
    throw std::invalid_argument("block shape mismatch");
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      m_(row_off_[bi] + i, col_off_[bj] + j) = block(i, j);
}

void BlockMat::add(std::size_t bi, std::size_t bj, const IntMat& block) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      m_(row_off_[bi] + i, col_off_[bj] + j) += block(i, j);
}

IntMat BlockMat::assemble() const { return m_; }

}  // namespace torhom
