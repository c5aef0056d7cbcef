#include "tiltcov/exact.hpp"

namespace tiltcov {

void Scalar::reduce() {
  v_.canonicalize();
  if (f_.p != 0) {
    if (v_.get_den() != 1) {
      mpz_class den = v_.get_den();
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(f_.p).get_mpz_t()) == 0)
        throw DivisionByZero();
      v_ = mpq_class(v_.get_num() * inv);
    }
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(f_.p).get_mpz_t());
    v_ = mpq_class(r);
  }
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(Field{}, q);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  return Scalar(f_, v_ + o.v_);
}
Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  return Scalar(f_, v_ - o.v_);
}
Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  return Scalar(f_, v_ * o.v_);
}
Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (f_.p == 0) return Scalar(f_, 1 / v_);
  mpz_class inv;
  mpz_class num = v_.get_num();
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mpz_class(f_.p).get_mpz_t()) == 0)
    throw DivisionByZero();
  return Scalar(f_, mpq_class(inv));
}

Mat Mat::identity(Field f, long n) {
  Mat m(f, n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  Mat r(field_, rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  Mat r(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff shape");
  Mat r(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat r(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Mat::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

Mat Mat::col(long j) const {
  Mat r(field_, rows_, 1);
  for (long i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
  return r;
}

Mat Mat::vstack(const Mat& o) const {
  if (cols_ != o.cols_) throw DimensionMismatch("vstack cols");
  Mat r(field_, rows_ + o.rows_, cols_);
  r.set_block(0, 0, *this);
  r.set_block(rows_, 0, o);
  return r;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ != o.rows_) throw DimensionMismatch("hstack rows");
  Mat r(field_, rows_, cols_ + o.cols_);
  r.set_block(0, 0, *this);
  r.set_block(0, cols_, o);
  return r;
}

void Mat::set_block(long i0, long j0, const Mat& m) {
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) at(i0 + i, j0 + j) = m.at(i, j);
}

Mat Mat::block(long i0, long j0, long r, long c) const {
  Mat b(field_, r, c);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) b.at(i, j) = at(i0 + i, j0 + j);
  return b;
}

long rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (!m.field().is_rational()) {
    std::vector<long> piv;
    rref(m, &piv);
    return static_cast<long>(piv.size());
  }
  // Bareiss: clear denominators row-wise, then fraction-free elimination.
  long rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (long i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (long j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).value().get_den().get_mpz_t());
    for (long j = 0; j < cols; ++j) {
      mpq_class v = m.at(i, j).value() * lcm;
      v.canonicalize();
      a[i][j] = v.get_num();
    }
  }
  mpz_class prev = 1;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long piv = -1;
    for (long i = r; i < rows; ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (long i = r + 1; i < rows; ++i) {
      for (long j = c + 1; j < cols; ++j) {
        mpz_class num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Mat rref(Mat m, std::vector<long>* pivot_cols) {
  long rows = m.rows(), cols = m.cols();
  long r = 0;
  std::vector<long> piv;
  for (long c = 0; c < cols && r < rows; ++c) {
    long p = -1;
    for (long i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (long j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (long j = c; j < cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (long i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (long j = c; j < cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivot_cols) *pivot_cols = std::move(piv);
  return m;
}

Mat kernel_basis(const Mat& m) {
  std::vector<long> piv;
  Mat r = rref(m, &piv);
  long cols = m.cols();
  std::vector<bool> is_piv(cols, false);
  for (long c : piv) is_piv[c] = true;
  std::vector<long> free_cols;
  for (long c = 0; c < cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  Mat k(m.field(), cols, static_cast<long>(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    long fc = free_cols[fi];
    k.at(fc, static_cast<long>(fi)) = Scalar::one(m.field());
    for (size_t pi = 0; pi < piv.size(); ++pi)
      k.at(piv[pi], static_cast<long>(fi)) = -r.at(static_cast<long>(pi), fc);
  }
  return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
  Mat aug = a.hstack(b);
  std::vector<long> piv;
  Mat r = rref(aug, &piv);
  for (long c : piv)
    if (c >= a.cols()) return std::nullopt;
  Mat x(a.field(), a.cols(), b.cols());
  for (size_t pi = 0; pi < piv.size(); ++pi)
    for (long j = 0; j < b.cols(); ++j)
      x.at(piv[pi], j) = r.at(static_cast<long>(pi), a.cols() + j);
  return x;
}

std::vector<long> independent_columns(const Mat& m) {
  std::vector<long> piv;
  rref(m, &piv);
  return piv;
}

Mat col_space_basis(const Mat& m) {
  std::vector<long> piv = independent_columns(m);
  Mat b(m.field(), m.rows(), static_cast<long>(piv.size()));
  for (size_t j = 0; j < piv.size(); ++j)
    for (long i = 0; i < m.rows(); ++i) b.at(i, static_cast<long>(j)) = m.at(i, piv[j]);
  return b;
}

bool is_invertible(const Mat& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  auto x = solve(m, Mat::identity(m.field(), m.rows()));
  if (!x) throw DimensionMismatch("inverse of singular matrix");
  return *x;
}

}  // namespace tiltcov
