#include <random>

#include "doctest.h"
#include "kzl/fp.hpp"
#include "kzl/rational.hpp"

using namespace kzl;
using namespace kzl::fp;

namespace {

Matrix random_matrix(const Field& F, int r, int c, std::mt19937& rng, int density = 100) {
  Matrix m(r, c);
  for (auto& x : m.a)
    if (int(rng() % 100) < density) x = u32(rng() % F.p);
  return m;
}

// number of solutions of m x = 0 by enumeration
long long brute_kernel_size(const Field& F, const Matrix& m) {
  long long total = 1;
  for (int i = 0; i < m.cols; ++i) total *= F.p;
  long long cnt = 0;
  Vec x(m.cols);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < m.cols; ++i) {
      x[i] = u32(c % F.p);
      c /= F.p;
    }
    if (is_zero(apply(F, m, x))) ++cnt;
  }
  return cnt;
}

}  // namespace

TEST_CASE("field arithmetic") {
  Field F(7);
  for (u32 a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK(F.from_int(-1) == 6);
  CHECK(F.to_signed(6) == -1);
  CHECK(F.pow(3, 6) == 1);
  CHECK_THROWS(Field(6));
}

TEST_CASE("kernel dimension matches enumeration") {
  std::mt19937 rng(1);
  for (u32 p : {2u, 3u}) {
    Field F(p);
    for (int trial = 0; trial < 40; ++trial) {
      int r = 1 + int(rng() % 4), c = 1 + int(rng() % 5);
      Matrix m = random_matrix(F, r, c, rng, 60);
      Matrix K = kernel(F, m);
      long long expect = brute_kernel_size(F, m);
      long long got = 1;
      for (int i = 0; i < K.rows; ++i) got *= p;
      CHECK(got == expect);
      CHECK(rank(F, m) + K.rows == c);
      for (int i = 0; i < K.rows; ++i) CHECK(is_zero(apply(F, m, K.row_vec(i))));
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937 rng(2);
  Field F(5);
  Matrix a = random_matrix(F, 150, 140, rng, 30), b = random_matrix(F, 140, 160, rng, 30);
  CHECK(multiply(F, a, b, Exec::serial) == multiply(F, a, b, Exec::parallel));
  Matrix x = a, y = a;
  CHECK(rref(F, x, Exec::serial) == rref(F, y, Exec::parallel));
  CHECK(x == y);
  Field G(1000003);
  Matrix c = random_matrix(G, 70, 90, rng), d = random_matrix(G, 90, 50, rng);
  Matrix e = multiply(G, c, d, Exec::serial);
  // entry check against naive 128-bit sums
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      unsigned __int128 s = 0;
      for (int k = 0; k < 90; ++k) s += (unsigned __int128)c(i, k) * d(k, j);
      CHECK(e(i, j) == u32(s % G.p));
    }
}

TEST_CASE("inverse and solve") {
  std::mt19937 rng(3);
  Field F(11);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(F, 6, 6, rng);
    auto inv = inverse(F, m);
    if (rank(F, m) == 6) {
      REQUIRE(inv);
      CHECK(multiply(F, m, *inv) == Matrix::identity(6));
    } else {
      CHECK(!inv);
    }
    Vec x(6);
    for (auto& v : x) v = u32(rng() % 11);
    Vec b = apply(F, m, x);
    auto s = solve(F, m, b);
    REQUIRE(s);
    CHECK(apply(F, m, *s) == b);
  }
}

TEST_CASE("subspace coordinates and intersection") {
  Field F(5);
  std::vector<Vec> vs{{1, 2, 0, 1}, {0, 1, 1, 0}, {1, 3, 1, 1}};
  Subspace S = span(F, 4, vs);
  CHECK(S.dim() == 2);
  Vec v{2, 4, 0, 2};
  REQUIRE(S.contains(v));
  Vec c = S.coords(v);
  Vec back(4, 0);
  for (int i = 0; i < S.dim(); ++i) axpy(F, back, c[i], S.rows()[i]);
  CHECK(back == v);
  Subspace T = span(F, 4, {{0, 1, 1, 0}, {0, 0, 0, 1}});
  Subspace I = intersect(F, S, T);
  CHECK(I.dim() == 1);
  CHECK(I.contains(Vec{0, 1, 1, 0}));
}

TEST_CASE("polynomial gcd") {
  Field F(7);
  Poly a{6, 0, 1};        // t^2 - 1
  Poly b{1, 1};           // t + 1
  Poly s, t;
  Poly g = poly_xgcd(F, a, b, s, t);
  CHECK(g == Poly{1, 1});
  Poly lhs = poly_mul(F, s, a), rhs = poly_mul(F, t, b);
  lhs.resize(std::max(lhs.size(), rhs.size()));
  for (size_t i = 0; i < rhs.size(); ++i) lhs[i] = F.add(lhs[i], rhs[i]);
  poly_trim(lhs);
  CHECK(lhs == g);
  auto [q, r] = poly_divmod(F, a, b);
  poly_trim(r);
  CHECK(r.empty());
  CHECK(poly_eval(F, a, 1) == 0);
}

TEST_CASE("rationals") {
  using namespace kzl::q;
  CHECK(str(parse("6/4")) == "3/2");
  CHECK(str(parse("-3")) == "-3/1");
  CHECK_THROWS(parse("1/0"));
  CHECK(valuation(parse("50/3"), 5) == 2);
  CHECK(valuation(parse("3/25"), 5) == -2);
  CHECK(!is_plocal(parse("1/5"), 5));
  Field F(5);
  CHECK(reduce_mod(parse("1/2"), F) == 3);
  QMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  CHECK(rank(m) == 1);
  CHECK(kernel(m).rows == 2);
}
