#pragma once
// Finite-dimensional algebras over F_p given by structure constants, and
// their finite-dimensional (optionally graded) left modules.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "kzl/fp.hpp"
#include "kzl/rootdata.hpp"

namespace kzl {

using fp::Field;
using fp::Matrix;
using fp::u32;
using fp::u64;
using fp::Vec;
using Degree = std::vector<int>;

struct Term {
  int k;
  u32 c;
};

// which gradings take part in degree bookkeeping
struct Grades {
  bool z = false;
  bool x = false;
};

struct Algebra {
  Field F;
  int n = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Term>> sc;  // sc[i*n+j] = b_i b_j
  Vec one;
  std::vector<int> grading;    // empty when ungraded
  std::vector<IVec> xgrading;  // empty when no X-grading
  std::vector<int> gens;       // basis indices generating A (empty: all)

  const std::vector<Term>& prod(int i, int j) const { return sc[size_t(i) * n + j]; }
  Vec unit(int i) const;
  Vec zero() const { return Vec(n, 0); }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec scale(const Vec& x, u32 c) const;
  Vec pow(const Vec& x, u64 e) const;
  Matrix left(const Vec& x) const;   // column j = x b_j
  Matrix right(const Vec& x) const;  // column j = b_j x
  Matrix left_basis(int i) const;
  std::vector<int> generator_indices() const;
  bool graded() const { return !grading.empty(); }
  bool xgraded() const { return !xgrading.empty(); }
  Degree degree(int i, Grades g) const;
  // structure checks: associativity, unit, gradings; throws
  void check() const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct Module {
  AlgebraPtr A;
  int dim = 0;
  std::vector<Matrix> act;  // one dim x dim matrix per basis element of A
  std::vector<int> grading;
  std::vector<IVec> xgrading;

  const Field& F() const { return A->F; }
  Matrix action(const Vec& x) const;
  Vec apply(const Vec& x, const Vec& v) const;
  bool graded() const { return !grading.empty(); }
  bool xgraded() const { return !xgrading.empty(); }
  Degree degree(int i, Grades g) const;
  void check() const;
};

Degree deg_add(const Degree& a, const Degree& b);
Degree deg_sub(const Degree& a, const Degree& b);
bool deg_zero(const Degree& a);

// Builds an algebra from a multiplication callback on basis indices.
Algebra make_algebra(const Field& F, int n, const std::vector<std::string>& labels,
                     const std::function<Vec(int, int)>& prod);

// Subalgebra spanned by the given (closed, unital for `unit`) vectors.
struct Embedded {
  AlgebraPtr alg;
  std::vector<Vec> basis;  // images of the basis in the ambient algebra
};
Embedded subalgebra(const Algebra& A, const std::vector<Vec>& basis, const Vec& unit);
// coordinates of an ambient element in the subalgebra basis; throws if outside
Vec embedded_coords(const Embedded& E, const Vec& x);
// eAe with a homogeneous basis when A is graded and e has degree 0.
Embedded corner(const Algebra& A, const Vec& e);
// Subalgebra of basis elements of multidegree 0.
Embedded grade_zero(const Algebra& A, Grades g);
Algebra opposite(const Algebra& A);
// A / I for a two-sided ideal I; basis = non-pivot coordinates of I's echelon form
struct QuotientMap {
  AlgebraPtr alg;
  fp::Subspace ideal;
  std::vector<int> keep;  // ambient basis indices kept
  Vec project(const Vec& x) const;
};
QuotientMap quotient(const Algebra& A, const fp::Subspace& I);
// two-sided ideal generated by the given elements
fp::Subspace ideal_generated(const Algebra& A, const std::vector<Vec>& xs);
bool is_idempotent(const Algebra& A, const Vec& e);

// Modules
Module regular_module(const AlgebraPtr& A);
// A e as a left module, with homogeneous basis when possible; the basis
// elements (ambient algebra vectors) are returned through `basis`.
Module left_ideal_module(const AlgebraPtr& A, const Vec& e, std::vector<Vec>* basis = nullptr);
Module submodule(const Module& M, const std::vector<Vec>& spanning);
// M / U where U is a submodule (spanned by the given vectors)
Module quotient_module(const Module& M, const std::vector<Vec>& spanning);
// submodule generated by a set of vectors
fp::Subspace generated_submodule(const Module& M, const std::vector<Vec>& vs);
Module shift(const Module& M, int z, const IVec& x = {});
Module direct_sum(const Module& a, const Module& b);
// vector-space dual as a module over the opposite algebra Aop
Module dual(const Module& M, const AlgebraPtr& Aop);
// dual twisted by an anti-involution sigma of A (sigma[i] = image of b_i);
// X-weights are kept when sigma negates them
Module dual_involution(const Module& M, const std::vector<Vec>& sigma, bool sigma_negates_x);
// eM over eAe
Module truncate_module(const Module& M, const Embedded& eAe);
// inflate a module over the grade-zero subalgebra to A (positive part acts by 0)
Module inflate(const Module& M0, const AlgebraPtr& A, const Embedded& A0, Grades g);
// restriction along an embedding
Module restrict_module(const Module& M, const Embedded& B);

// Hom_A(M, N); degree preserving in the selected gradings when requested.
std::vector<Matrix> hom_space(const Module& M, const Module& N, Grades g = {});
bool is_isomorphic(const Module& M, const Module& N);
// radical and socle series helpers on modules
fp::Subspace module_radical(const Module& M, const std::vector<Vec>& rad_basis);
fp::Subspace module_socle(const Module& M, const std::vector<Vec>& rad_basis);

}  // namespace kzl
