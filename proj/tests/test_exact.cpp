#include <doctest.h>

#include "tiltcov/exact.hpp"

using namespace tiltcov;

namespace {

Mat mat_of(Field f, long rows, long cols, std::initializer_list<long> entries) {
  Mat m(f, rows, cols);
  auto it = entries.begin();
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m.at(r, c) = Scalar::of_int(f, *it++);
  return m;
}

}  // namespace

TEST_CASE("rank and kernel over Q") {
  Field q;
  Mat m = mat_of(q, 2, 3, {1, 2, 3, 2, 4, 6});
  CHECK(rank(m) == 1);
  Mat k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).rows() == 2);
  for (long r = 0; r < 2; ++r)
    for (long c = 0; c < k.cols(); ++c) CHECK((m * k).at(r, c).is_zero());

  Mat id = Mat::identity(q, 4);
  CHECK(rank(id) == 4);
  CHECK(kernel_basis(id).cols() == 0);
}

TEST_CASE("rank-nullity on assorted shapes") {
  Field q;
  long seedmat[] = {3, -1, 4, 1, -5, 9, 2, -6, 5, 3, 5, -8, 9, 7, -9, 3,
                   2, 3, -8, 4, 6, -2, 6, 4};
  for (long rows = 1; rows <= 4; ++rows)
    for (long cols = 1; cols <= 4; ++cols) {
      Mat m(q, rows, cols);
      for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c)
          m.at(r, c) = Scalar::of_int(q, seedmat[(r * cols + c + rows) % 24]);
      CHECK(rank(m) + kernel_basis(m).cols() == cols);
      CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("solve produces exact solutions") {
  Field q;
  Mat a = mat_of(q, 2, 2, {1, 2, 3, 5});
  Mat b = mat_of(q, 2, 1, {1, 2});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  Mat sing = mat_of(q, 2, 2, {1, 2, 2, 4});
  Mat c = mat_of(q, 2, 1, {1, 0});
  CHECK_FALSE(solve(sing, c).has_value());
}

TEST_CASE("exact rational arithmetic keeps full precision") {
  Field q;
  // Hilbert-style matrix: floating point would lose rank certainty
  Mat h(q, 4, 4);
  for (long r = 0; r < 4; ++r)
    for (long c = 0; c < 4; ++c) h.at(r, c) = Scalar::ratio(1, r + c + 1);
  CHECK(rank(h) == 4);
  Mat inv = inverse(h);
  CHECK(h * inv == Mat::identity(q, 4));
}

TEST_CASE("prime field arithmetic") {
  Field f5{5};
  Scalar three = Scalar::of_int(f5, 3);
  CHECK((three * three.inverse()).is_one());
  Mat m = mat_of(f5, 2, 2, {2, 1, 1, 3});  // det = 5 = 0 mod 5
  CHECK(rank(m) == 1);
  Mat m2 = mat_of(f5, 2, 2, {2, 1, 1, 4});  // det = 7 = 2 mod 5
  CHECK(is_invertible(m2));
}

TEST_CASE("independent_columns and col_space_basis are consistent") {
  Field q;
  Mat m = mat_of(q, 3, 4, {1, 2, 0, 1, 0, 0, 1, 1, 1, 2, 1, 2});
  auto idx = independent_columns(m);
  CHECK(static_cast<long>(idx.size()) == rank(m));
  CHECK(col_space_basis(m).cols() == rank(m));
}

TEST_CASE("rref is idempotent") {
  Field q;
  Mat m = mat_of(q, 3, 3, {0, 2, 4, 1, 1, 1, 1, 3, 5});
  Mat r = rref(m);
  CHECK(rref(r) == r);
  CHECK(rank(r) == rank(m));
}
