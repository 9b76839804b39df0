#pragma once
// Structure theory over F_p: radical, center, idempotents, blocks, basic
// algebras and the grading by the radical filtration.

#include <stdexcept>
#include <string>
#include <vector>

#include "kzl/algebra.hpp"

namespace kzl {

struct NonSplitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Jacobson radical by the modular trace algorithm on the left regular
// representation.
fp::Subspace radical(const Algebra& A, fp::Exec ex = fp::Exec::parallel);
// rad^0 = A, rad^1 = J, ..., ending with the zero space
std::vector<fp::Subspace> radical_series(const Algebra& A, const fp::Subspace& J);
std::vector<fp::Subspace> radical_series(const Algebra& A);
// span{xy : x in I, y in K}
fp::Subspace ideal_product(const Algebra& A, const fp::Subspace& I, const fp::Subspace& K);

fp::Subspace center(const Algebra& A);
// minimal polynomial of x inside the unital corner with unit e
fp::Poly minimal_polynomial(const Algebra& A, const Vec& x, const Vec& e);
// primitive idempotents of the center (block idempotents)
std::vector<Vec> central_idempotents(const Algebra& A);

// Complete set of primitive orthogonal idempotents, homogeneous of degree 0
// in the selected gradings. Throws NonSplitError if some simple is not split.
std::vector<Vec> primitive_idempotents(const Algebra& A, Grades g = {});

// One primitive idempotent per isomorphism class of simple modules.
std::vector<Vec> idempotent_representatives(const Algebra& A, Grades g = {});

struct BasicData {
  fp::Subspace J;
  std::vector<Vec> idempotents;    // all primitive idempotents
  std::vector<int> cls;            // iso class of each idempotent
  std::vector<int> reps;           // representative idempotent per class
  std::vector<int> multiplicity;   // idempotents per class (= dim of simple)
  std::vector<Vec> central;        // block idempotents
  std::vector<int> block_of;       // block of each class
  Embedded basic;                  // eAe, e = sum of representatives
  std::vector<Vec> basic_idempotents;  // representatives in eAe coordinates
  std::vector<std::vector<int>> quiver;  // arrows i -> j: dim e_j (J/J^2) e_i
  int num_classes() const { return int(reps.size()); }
};

BasicData blocks_and_basic(const Algebra& A, Grades g = {});

// Cartan matrix c(i,j) = dim e_i A e_j for the given idempotents.
std::vector<std::vector<int>> cartan_matrix(const Algebra& A, const std::vector<Vec>& es);

// Associated graded algebra of the radical filtration. Basis vectors of
// grade 0 are taken from `grade0` (modulo J) when supplied, so idempotents
// stay recognizable; an existing X-grading is kept.
struct RadicalGraded {
  AlgebraPtr alg;
  std::vector<Vec> adapted;  // adapted basis in the source algebra
  int loewy_length = 0;
};
RadicalGraded radical_graded(const Algebra& A, const std::vector<Vec>& grade0 = {});
// Same for any multiplicative filtration A = F_0 > F_1 > ... > F_L = 0.
RadicalGraded associated_graded(const Algebra& A, const std::vector<fp::Subspace>& series,
                                const std::vector<Vec>& grade0 = {});

// A / AeA
QuotientMap quotient_by_idempotent(const Algebra& A, const Vec& e);

}  // namespace kzl
