#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiltcov {

struct FieldMismatch : std::runtime_error {
  FieldMismatch() : std::runtime_error("scalars from different fields") {}
};
struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

/// Ground field: the rationals (p == 0) or a prime field F_p.
struct Field {
  unsigned long p = 0;
  bool operator==(const Field&) const = default;
  bool is_rational() const { return p == 0; }
};

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (mpq canonical form); F_p elements are residues in [0, p).
class Scalar {
 public:
  Scalar() : f_{}, v_(0) {}
  Scalar(Field f, mpq_class v) : f_(f), v_(std::move(v)) { reduce(); }

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  static Scalar of_int(Field f, long n) { return Scalar(f, n); }
  static Scalar ratio(long num, long den);

  Field field() const { return f_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator-() const { return Scalar(f_, -v_); }
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }

  std::string str() const { return v_.get_str(); }

 private:
  Field f_;
  mpq_class v_;
  void reduce();
  void check(const Scalar& o) const {
    if (!(f_ == o.f_)) throw FieldMismatch();
  }
};

/// Dense matrix over one field, row-major.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(Field f, long rows, long cols)
      : field_(f), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows * cols), Scalar::zero(f)) {}

  static Mat identity(Field f, long n);

  Field field() const { return field_; }
  long rows() const { return rows_; }
  long cols() const { return cols_; }

  Scalar& at(long i, long j) { return e_[static_cast<size_t>(i * cols_ + j)]; }
  const Scalar& at(long i, long j) const {
    return e_[static_cast<size_t>(i * cols_ + j)];
  }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& c) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const;
  bool is_zero() const;

  Mat col(long j) const;
  /// Stacks o below this matrix (column counts must agree).
  Mat vstack(const Mat& o) const;
  /// Stacks o to the right of this matrix (row counts must agree).
  Mat hstack(const Mat& o) const;
  void set_block(long i0, long j0, const Mat& m);
  Mat block(long i0, long j0, long r, long c) const;

 private:
  Field field_;
  long rows_, cols_;
  std::vector<Scalar> e_;
};

/// Row rank by fraction-free (Bareiss) elimination over the rationals,
/// plain exact elimination over F_p.
long rank(const Mat& m);

/// Columns form a basis of the right null space; 0 columns iff full column rank.
Mat kernel_basis(const Mat& m);

/// Some X with a*X = b, or nullopt if the system is inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Reduced row echelon form; records pivot columns if requested.
Mat rref(Mat m, std::vector<long>* pivot_cols = nullptr);

/// Subset of columns forming a basis of the column space (indices returned).
std::vector<long> independent_columns(const Mat& m);
Mat col_space_basis(const Mat& m);

bool is_invertible(const Mat& m);
Mat inverse(const Mat& m);

}  // namespace tiltcov
