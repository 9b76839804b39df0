#include "doctest.h"
#include "kzl/instances.hpp"
#include "kzl/resolution.hpp"
#include "kzl/structure.hpp"

using namespace kzl;

namespace {

AlgebraPtr ptr(Algebra A) { return std::make_shared<const Algebra>(std::move(A)); }

Module simple(const AlgebraPtr& A, const Vec& e) { return inst::simple_top(A, e, radical(*A)); }

const Grades Z{true, false};

}  // namespace

TEST_CASE("periodic resolution over F5[x]/(x^2)") {
  Field F(5);
  auto A = ptr(inst::truncated_polynomial(F, 2));
  auto S = ProjectiveSystem::make(A, Z);
  Module k = simple(A, A->one);
  Resolution R = minimal_resolution(S, k, 5);
  REQUIRE(R.terms.size() == 6);
  for (int n = 0; n <= 5; ++n) {
    REQUIRE(R.terms[n].gens.size() == 1);
    CHECK(R.terms[n].gens[0].d == Degree{n});
  }
  CHECK(check_minimality(R));
  ExtTable E = ext_table(S, k, k, 5);
  for (int n = 0; n <= 5; ++n)
    for (int r = -2; r <= 7; ++r) CHECK(E.at(n, r) == (r == n ? 1 : 0));
}

TEST_CASE("F5[x]/(x^3): a degree-3 syzygy") {
  Field F(5);
  auto A = ptr(inst::truncated_polynomial(F, 3));
  auto S = ProjectiveSystem::make(A, Z);
  Module k = simple(A, A->one);
  ExtTable E = ext_table(S, k, k, 4);
  CHECK(E.at(1, 1) == 1);
  CHECK(E.at(2, 3) == 1);
  CHECK(E.at(2, 2) == 0);
  CHECK(E.at(3, 4) == 1);
  CHECK(E.at(4, 6) == 1);
}

TEST_CASE("path algebra 1 -> 2") {
  Field F(5);
  auto A = ptr(inst::path_a2(F));
  auto S = ProjectiveSystem::make(A, Z, {A->unit(0), A->unit(1)});
  Module L1 = simple(A, A->unit(0)), L2 = simple(A, A->unit(1));
  Resolution R = minimal_resolution(S, L1, 4);
  CHECK(R.complete);
  REQUIRE(R.terms.size() == 3);
  REQUIRE(R.terms[1].gens.size() == 1);
  CHECK(R.terms[1].gens[0].i == 1);
  CHECK(R.terms[1].gens[0].d == Degree{1});
  CHECK(R.terms[2].dim == 0);
  CHECK(check_euler(R));
  CHECK(check_minimality(R));
  // projective module: length 0
  Module P1 = left_ideal_module(A, A->unit(0));
  Resolution RP = minimal_resolution(S, P1, 3);
  CHECK(RP.complete);
  CHECK(RP.terms.size() == 2);
  ExtTable E = ext_table(S, L1, L2, 3);
  CHECK(E.at(1, 1) == 1);
  CHECK(E.row_sum(1) == 1);
  CHECK(E.row_sum(2) == 0);
}

TEST_CASE("semisimple algebra has no higher ext") {
  Field F(5);
  Algebra B = inst::matrix_algebra(F, 2);
  B.grading.assign(B.n, 0);
  auto Bp = ptr(B);
  auto S = ProjectiveSystem::make(Bp, Z);
  Module L = simple(Bp, Bp->unit(0));
  ExtTable E = ext_table(S, L, L, 3);
  CHECK(E.at(0, 0) == 1);
  for (int n = 1; n <= 3; ++n) CHECK(E.row_sum(n) == 0);
}

TEST_CASE("ext0 is graded hom; row sums match the free-resolution oracle") {
  Field F(3);
  for (int which = 0; which < 3; ++which) {
    Algebra B = which == 0 ? inst::upper_triangular(F, 3)
                : which == 1 ? inst::truncated_polynomial(F, 3)
                             : inst::path_a2(F);
    auto A = ptr(B);
    auto S = ProjectiveSystem::make(A, Z);
    fp::Subspace J = radical(*A);
    std::vector<Module> mods;
    for (const auto& e : S->idem) {
      mods.push_back(inst::simple_top(A, e, J));
      mods.push_back(left_ideal_module(A, e));
    }
    mods.push_back(regular_module(A));
    for (const auto& M : mods)
      for (const auto& N : mods) {
        ExtTable E = ext_table(S, M, N, 3);
        auto oracle = ext_ungraded_free(M, N, 3);
        for (int n = 0; n <= 3; ++n) CHECK(E.row_sum(n) == oracle[n]);
        for (int r = -4; r <= 4; ++r)
          CHECK(E.at(0, r) == int(hom_space(M, shift(N, r), Z).size()));
      }
  }
}

TEST_CASE("ungraded resolution with no grading selected") {
  Field F(5);
  Algebra B = inst::cyclic_group_algebra(F, 5);
  auto A = ptr(B);
  auto S = ProjectiveSystem::make(A, Grades{});
  Module k = inst::simple_top(A, A->one, radical(*A));
  Resolution R = minimal_resolution(S, k, 4);
  CHECK(check_minimality(R));
  auto E = ext_table(R, k, 3);
  for (int n = 0; n <= 3; ++n) CHECK(E.row_sum(n) == 1);
  auto oracle = ext_ungraded_free(k, k, 3);
  CHECK(oracle == std::vector<int>{1, 1, 1, 1});
  CHECK_THROWS(minimal_resolution(S, k, -1));
}
