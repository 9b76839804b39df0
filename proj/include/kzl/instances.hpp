#pragma once
// Small named algebras used by the test corpus and the CLI.

#include "kzl/algebra.hpp"

namespace kzl::inst {

// F_p[x]/(x^k), basis 1, x, ..., x^{k-1}; x in grade `grade`
Algebra truncated_polynomial(const Field& F, int k, int grade = 1);
// F_p[x]/(x^2 - c x), ungraded
Algebra quadratic(const Field& F, long long c);
// M_n(F_p), basis E_ij at index i*n+j
Algebra matrix_algebra(const Field& F, int n);
// path algebra of 1 -> 2: basis e1, e2, a with a = e2 a e1; a in grade `grade`
Algebra path_a2(const Field& F, int grade = 1);
// group algebra of the cyclic group of order m
Algebra cyclic_group_algebra(const Field& F, int m);
// upper triangular n x n matrices, graded by j - i
Algebra upper_triangular(const Field& F, int n);

// the simple module of a local algebra (all radical elements act by 0)
Module trivial_module(const AlgebraPtr& A, const std::vector<Vec>& rad_basis);
// the simple top of A e for a primitive idempotent e
Module simple_top(const AlgebraPtr& A, const Vec& e, const fp::Subspace& J);

}  // namespace kzl::inst
