#include "doctest.h"
#include "kzl/algebra.hpp"
#include "kzl/instances.hpp"
#include "kzl/structure.hpp"

using namespace kzl;

namespace {
AlgebraPtr ptr(Algebra A) { return std::make_shared<const Algebra>(std::move(A)); }
}  // namespace

TEST_CASE("structure checks") {
  Field F(5);
  inst::truncated_polynomial(F, 3).check();
  inst::matrix_algebra(F, 2).check();
  inst::path_a2(F).check();
  inst::upper_triangular(F, 3).check();
  inst::cyclic_group_algebra(F, 4).check();
  // non-associative table: b1 b1 = b1, b1 b2 = b2, b2 b1 = b1... with unit b0
  Algebra bad = make_algebra(F, 3, {}, [](int i, int j) {
    Vec v(3, 0);
    if (i == 0) v[j] = 1;
    else if (j == 0) v[i] = 1;
    else if (i == 1 && j == 1) v[2] = 1;
    else if (i == 1 && j == 2) v[1] = 1;
    return v;
  });
  bad.one = {1, 0, 0};
  CHECK_THROWS(bad.check());
  // grading violation
  Algebra g = inst::truncated_polynomial(F, 3);
  g.grading = {0, 1, 1};
  CHECK_THROWS(g.check());
}

TEST_CASE("corner, quotient and opposite") {
  Field F(5);
  Algebra M = inst::matrix_algebra(F, 2);
  Embedded c = corner(M, M.unit(0));
  CHECK(c.alg->n == 1);
  c.alg->check();
  Algebra P = inst::path_a2(F);
  Embedded c2 = corner(P, P.unit(1));
  CHECK(c2.alg->n == 1);
  CHECK_THROWS(corner(P, P.unit(2)));
  fp::Subspace I = ideal_generated(P, {P.unit(2)});
  CHECK(I.dim() == 1);
  QuotientMap Q = quotient(P, I);
  CHECK(Q.alg->n == 2);
  Q.alg->check();
  Algebra op = opposite(P);
  op.check();
  CHECK(op.mul(op.unit(2), op.unit(1)) == op.unit(2));
  Embedded z = grade_zero(P, Grades{true, false});
  CHECK(z.alg->n == 2);
  z.alg->check();
}

TEST_CASE("modules: regular, submodule, quotient, duals") {
  Field F(5);
  auto A = ptr(inst::path_a2(F));
  Module R = regular_module(A);
  R.check();
  std::vector<Vec> basis;
  Module P1 = left_ideal_module(A, A->unit(0), &basis);
  P1.check();
  CHECK(P1.dim == 2);
  Module P2 = left_ideal_module(A, A->unit(1));
  CHECK(P2.dim == 1);
  // Hom(A e, M) = e M
  auto H = hom_space(P1, R);
  CHECK(int(H.size()) == fp::rank(F, R.action(A->unit(0))));
  auto Aop = ptr(opposite(*A));
  Module D = dual(P1, Aop);
  D.check();
  Module DD = dual(D, A);
  CHECK(is_isomorphic(DD, P1));
  CHECK(!is_isomorphic(P1, direct_sum(P2, P2)));
  // Hom(A, A) = A as a vector space
  CHECK(int(hom_space(R, R).size()) == A->n);
  // graded hom respects degrees
  Module S = shift(P2, 1);
  CHECK(hom_space(S, P1, Grades{true, false}).size() == 1);
  CHECK(hom_space(P2, P1, Grades{true, false}).size() == 0);
  // quotient and submodule
  fp::Subspace rad = generated_submodule(R, {A->unit(2)});
  Module sub = submodule(R, rad.rows());
  sub.check();
  Module quo = quotient_module(R, rad.rows());
  quo.check();
  CHECK(sub.dim + quo.dim == R.dim);
  CHECK_THROWS(quotient_module(R, {A->unit(0)}));
}

TEST_CASE("truncation is exact on a short exact sequence") {
  Field F(5);
  auto A = ptr(inst::upper_triangular(F, 3));
  Module R = regular_module(A);
  fp::Subspace J = radical(*A);
  fp::Subspace JR = module_radical(R, J.rows());
  Module sub = submodule(R, JR.rows());
  Module quo = quotient_module(R, JR.rows());
  Vec e11(A->n, 0);
  e11[0] = 1;
  for (const Vec& e : {A->one, e11, A->sub(A->one, e11)}) {
    Embedded eAe = corner(*A, e);
    int a = truncate_module(sub, eAe).dim, b = truncate_module(R, eAe).dim,
        c = truncate_module(quo, eAe).dim;
    CHECK(a + c == b);
    truncate_module(R, eAe).check();
  }
}

TEST_CASE("inflation and restriction") {
  Field F(3);
  auto A = ptr(inst::truncated_polynomial(F, 3));
  Embedded A0 = grade_zero(*A, Grades{true, false});
  Module triv;
  triv.A = A0.alg;
  triv.dim = 1;
  triv.act = {fp::Matrix::identity(1)};
  Module inf = inflate(triv, A, A0, Grades{true, false});
  inf.check();
  CHECK(inf.act[1].is_zero());
  Module back = restrict_module(inf, A0);
  back.check();
  fp::Subspace s = module_socle(regular_module(A), radical(*A).rows());
  CHECK(s.dim() == 1);
}
