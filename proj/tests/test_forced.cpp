#include "doctest.h"
#include "kzl/forced.hpp"
#include "kzl/sl2lab.hpp"
#include "kzl/structure.hpp"

using namespace kzl;

namespace {

int total(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// graded dimensions of the radical filtration of A_Q
std::vector<int> rational_dims(const LatticeAlgebra& A) {
  auto s = radical_series_Q(A);
  std::vector<int> d;
  for (size_t i = 0; i + 1 < s.size(); ++i) d.push_back(s[i].dim() - s[i + 1].dim());
  return d;
}

std::vector<LatticeAlgebra> corpus() {
  return {lattice_integers(5),      lattice_quadratic(5, 0),          lattice_quadratic(5, 5),
          lattice_quadratic(7, 7),  lattice_quadratic(5, 0, {2}),     lattice_path_a2(3),
          *sl2::build_u(3).lattice, *sl2::schur_algebra(2, 2).lattice, *sl2::schur_algebra(3, 2).lattice};
}

}  // namespace

TEST_CASE("forced grading examples") {
  auto Z = forced_grading(lattice_integers(5));
  CHECK(Z.dims == std::vector<int>{1});

  auto G = forced_grading(lattice_quadratic(5, 0));
  CHECK(G.dims == std::vector<int>{1, 1});
  const Algebra& B = *G.graded.alg;
  CHECK(B.grading == std::vector<int>{0, 1});
  CHECK(fp::is_zero(B.mul(B.unit(1), B.unit(1))));

  auto H = forced_grading(lattice_quadratic(5, 5));
  CHECK(H.dims == std::vector<int>{2});
  // the reduction F_5[x]/(x^2) is not semisimple, but gr~ sits in grade 0
  CHECK(radical(*H.reduction).dim() == 1);
}

TEST_CASE("forced vs radical grading") {
  auto c = compare_with_radical_grading(lattice_quadratic(5, 0));
  CHECK(c.agree);
  auto d = compare_with_radical_grading(lattice_quadratic(5, 5));
  CHECK(!d.agree);
  CHECK(d.forced == std::vector<int>{2});
  CHECK(d.radical == std::vector<int>{1, 1});
  // S(2,2) is semisimple over Q but not over F_2
  auto s = compare_with_radical_grading(*sl2::schur_algebra(2, 2).lattice);
  CHECK(s.forced == std::vector<int>{10});
  CHECK(total(s.radical) == 10);
  CHECK(!s.agree);
}

TEST_CASE("conservation, multiplicativity and base change on the corpus") {
  for (const auto& A : corpus()) {
    auto G = forced_grading(A);
    CHECK(total(G.dims) == A.n);
    CHECK(check_multiplicativity(G));
    CHECK_NOTHROW(G.graded.alg->check());
    CHECK(G.dims == rational_dims(A));
  }
}

TEST_CASE("u(sl2,3) integral form") {
  auto U = sl2::build_u(3);
  const LatticeAlgebra& L = *U.lattice;
  CHECK(L.n == 27);
  Algebra R = L.reduce();
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j) CHECK(R.mul(R.unit(i), R.unit(j)) == U.alg->mul(U.alg->unit(i), U.alg->unit(j)));
}

TEST_CASE("saturation") {
  Field F(5);
  auto W = saturate_mod_p({{q::Q(5), q::Q(5)}}, 2, 5, F);
  CHECK(W.dim() == 1);
  CHECK(W.contains(Vec{1, 1}));
  // (1,0) and (1,5) span a lattice whose saturation is everything
  auto V = saturate_mod_p({{q::Q(1), q::Q(0)}, {q::Q(1), q::Q(5)}}, 2, 5, F);
  CHECK(V.dim() == 2);
  CHECK(V.contains(Vec{0, 1}));
  CHECK(saturate_mod_p({}, 3, 5, F).dim() == 0);
  CHECK(saturate_mod_p({}, 3, 5, F).ambient() == 3);
  CHECK(saturate_mod_p({{q::Q(1, 25), q::Q(2, 5)}}, 2, 5, F).contains(Vec{1, 10 % 5}));
}

TEST_CASE("x-compatibility") {
  CHECK(x_compatibility_check(lattice_quadratic(5, 0)).holds);  // no X-grading
  CHECK(x_compatibility_check(lattice_quadratic(5, 0, {2})).holds);
  CHECK(x_compatibility_check(*sl2::build_u(3).lattice).holds);
  // basis 1, 1 + x with weights 0, 2 (not an algebra grading): the radical
  // x = b1 - b0 mixes the two weights
  auto A = make_lattice(5, 2, {"1", "1+x"}, [](int i, int j) {
    q::QVec v(2);
    if (i == 0) v[j] = 1;
    else if (j == 0) v[i] = 1;
    else {  // (1+x)^2 = 1 + 2x = -1 + 2(1+x)
      v[0] = -1;
      v[1] = 2;
    }
    return v;
  });
  A.one = {1, 0};
  A.xgrading = {{0}, {2}};
  auto X = x_compatibility_check(A);
  CHECK(!X.holds);
  CHECK(X.grade == 1);
  CHECK(X.weight == IVec{0});
}

TEST_CASE("forced grading of a module") {
  auto L = std::make_shared<const LatticeAlgebra>(lattice_quadratic(5, 0));
  auto G = forced_grading(*L);
  LatticeModule M;
  M.A = L;
  M.dim = 2;
  for (int a = 0; a < 2; ++a) {
    q::QMatrix m(2, 2);
    for (int c = 0; c < 2; ++c)
      for (const auto& t : L->prod(a, c)) m(t.k, c) += t.c;
    M.act.push_back(m);
  }
  Module R = forced_grading_module(G, M);
  CHECK(R.grading == std::vector<int>{0, 1});
  CHECK_NOTHROW(R.check());
}

TEST_CASE("lattice checks reject bad input") {
  auto A = lattice_quadratic(5, 0);
  A.sc[3] = {{1, q::Q(1, 5)}};  // x*x = x/5
  CHECK_THROWS(A.check());
  auto B = lattice_quadratic(5, 0);
  B.one = {0, 1};
  CHECK_THROWS(B.check());
}
