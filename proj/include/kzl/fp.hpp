#pragma once
// Dense linear algebra over prime fields F_p.
//
// The row-reduction and product kernels come in two flavours selected by
// Exec: a plain serial loop (the reference) and an OpenMP version that
// splits the elimination over rows.  Both produce identical results.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kzl::fp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using Vec = std::vector<u32>;

bool is_prime(u64 n);

struct Field {
  u32 p = 2;

  Field() = default;
  explicit Field(u32 prime);

  u32 add(u32 a, u32 b) const {
    u32 s = a + b;
    return s >= p ? s - p : s;
  }
  u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
  u32 mul(u32 a, u32 b) const { return u32(u64(a) * b % p); }
  u32 neg(u32 a) const { return a ? p - a : 0; }
  u32 pow(u32 a, u64 e) const;
  u32 inv(u32 a) const;
  u32 from_int(long long v) const;
  // symmetric representative in (-p/2, p/2]
  long long to_signed(u32 a) const { return a > p / 2 ? (long long)a - p : a; }
  bool operator==(const Field& o) const { return p == o.p; }
};

enum class Exec { serial, parallel };

struct Matrix {
  int rows = 0, cols = 0;
  std::vector<u32> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), 0) {}

  u32& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  u32 operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
  u32* row(int i) { return a.data() + size_t(i) * cols; }
  const u32* row(int i) const { return a.data() + size_t(i) * cols; }
  Vec row_vec(int i) const { return Vec(row(i), row(i) + cols); }
  Vec col_vec(int j) const;
  void set_row(int i, const Vec& v);
  bool is_zero() const;
  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix from_cols(const std::vector<Vec>& cols, int rows);
};

Matrix transpose(const Matrix& m);
Matrix multiply(const Field& F, const Matrix& x, const Matrix& y,
                Exec ex = Exec::parallel);
Matrix add(const Field& F, const Matrix& x, const Matrix& y);
Matrix scale(const Field& F, const Matrix& x, u32 c);
// x += c*y
void axpy(const Field& F, Matrix& x, u32 c, const Matrix& y);
Vec apply(const Field& F, const Matrix& m, const Vec& v);
// v^T m
Vec apply_left(const Field& F, const Vec& v, const Matrix& m);

void axpy(const Field& F, Vec& x, u32 c, const Vec& y);
bool is_zero(const Vec& v);

// Reduced row echelon form in place, returns pivot columns.
std::vector<int> rref(const Field& F, Matrix& m, Exec ex = Exec::parallel);
int rank(const Field& F, Matrix m, Exec ex = Exec::parallel);
// Rows of the result span {x : m x = 0}.
Matrix kernel(const Field& F, const Matrix& m, Exec ex = Exec::parallel);
// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Field& F, const Matrix& m, const Vec& b,
                         Exec ex = Exec::parallel);
std::optional<Matrix> inverse(const Field& F, const Matrix& m);

// Growing subspace kept in reduced echelon form.  Coordinates of a member
// with respect to the stored rows are read off at the pivot columns.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& F, int ambient) : F_(F), n_(ambient) {}

  int ambient() const { return n_; }
  int dim() const { return int(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return piv_; }

  // Reduces v against the stored rows; returns the residue.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  // Returns true if v enlarged the space.
  bool add(const Vec& v);
  // Coordinates w.r.t. rows(); caller guarantees membership.
  Vec coords(const Vec& v) const;
  Matrix as_matrix() const { return Matrix::from_rows(rows_, n_); }

 private:
  Field F_;
  int n_ = 0;
  std::vector<Vec> rows_;  // sorted by pivot
  std::vector<int> piv_;
};

Subspace span(const Field& F, int ambient, const std::vector<Vec>& vs);
Subspace intersect(const Field& F, const Subspace& a, const Subspace& b);

// Polynomials over F_p, coefficient i of t^i.
using Poly = std::vector<u32>;
void poly_trim(Poly& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
// quotient and remainder
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
// g = gcd, s*a + t*b = g (monic g)
Poly poly_xgcd(const Field& F, const Poly& a, const Poly& b, Poly& s, Poly& t);
u32 poly_eval(const Field& F, const Poly& a, u32 x);

}  // namespace kzl::fp
