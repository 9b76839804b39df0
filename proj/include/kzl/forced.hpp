#pragma once
// Lattice algebras over the p-local integers Z_(p) and the forced grading:
// grade n of gr~ A is (L cap rad^n A_Q) / (L cap rad^{n+1} A_Q), read mod p.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "kzl/algebra.hpp"
#include "kzl/rational.hpp"
#include "kzl/structure.hpp"

namespace kzl {

struct QTerm {
  int k;
  q::Q c;
};

// Free Z_(p)-lattice on basis b_0..b_{n-1} with rational structure constants
// whose denominators are prime to p.
struct LatticeAlgebra {
  unsigned p = 0;
  int n = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<QTerm>> sc;  // sc[i*n+j] = b_i b_j
  q::QVec one;
  std::vector<IVec> xgrading;  // optional

  const std::vector<QTerm>& prod(int i, int j) const { return sc[size_t(i) * n + j]; }
  q::QVec mul(const q::QVec& x, const q::QVec& y) const;
  bool xgraded() const { return !xgrading.empty(); }
  // associativity, unit, p-locality, X-grading; throws
  void check() const;
  // A_k = L / pL
  Algebra reduce() const;
  // A_Q with the same basis, as left multiplication matrices
  q::QMatrix left_basis(int i) const;
};

LatticeAlgebra make_lattice(unsigned p, int n, const std::vector<std::string>& labels,
                            const std::function<q::QVec(int, int)>& prod);

// small lattices: Z_(p); Z_(p)[x]/(x^2 - c x) (x optionally X-graded);
// the path algebra of 1 -> 2 on e1, e2, a with a = e2 a e1
LatticeAlgebra lattice_integers(unsigned p);
LatticeAlgebra lattice_quadratic(unsigned p, long long c, const IVec& xweight = {});
LatticeAlgebra lattice_path_a2(unsigned p);

struct LatticeModule {
  std::shared_ptr<const LatticeAlgebra> A;
  int dim = 0;
  std::vector<q::QMatrix> act;  // per basis element of A
  void check() const;
  Module reduce(const AlgebraPtr& Ak) const;
};

// rad(A_Q) as the kernel of the trace form
q::QSubspace radical_Q(const LatticeAlgebra& A);
// rad^0 = A_Q, ..., 0
std::vector<q::QSubspace> radical_series_Q(const LatticeAlgebra& A);

// Z_(p)-basis of L cap V reduced mod p; always of dimension dim V.
fp::Subspace saturate_mod_p(const std::vector<q::QVec>& V, int ambient, unsigned p, const Field& F);

struct ForcedGraded {
  AlgebraPtr reduction;                // A_k
  std::vector<q::QSubspace> rad_Q;     // rad^n A_Q
  std::vector<fp::Subspace> filt;      // (L cap rad^n A_Q) mod p
  RadicalGraded graded;                // gr~ A over F_p
  std::vector<int> dims;               // dim of each grade
};

ForcedGraded forced_grading(const LatticeAlgebra& A);
// gr~ M over gr~ A: grade n is (F_n M)/(F_{n+1} M), F_n = filt[n] acting on M mod p
Module forced_grading_module(const ForcedGraded& G, const LatticeModule& M);
// filt[a] filt[b] inside filt[a+b], checked on basis pairs
bool check_multiplicativity(const ForcedGraded& G);

struct XCompatibility {
  bool holds = true;
  int grade = -1;  // witness when false
  IVec weight;
  std::string reason;
};
XCompatibility x_compatibility_check(const LatticeAlgebra& A);

struct GradingComparison {
  std::vector<int> forced, radical;
  bool agree = false;
};
GradingComparison compare_with_radical_grading(const LatticeAlgebra& A);

}  // namespace kzl
