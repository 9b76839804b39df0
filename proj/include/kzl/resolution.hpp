#pragma once
// Minimal graded projective resolutions and graded Ext tables.
//
// Degrees are multidegrees: the Z-grading and/or the X-grading, selected by
// Grades.  With no grading selected everything sits in the empty degree and
// the same code computes ungraded minimal resolutions.

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "kzl/algebra.hpp"

namespace kzl {

// Indecomposable projectives P(i) = A e_i, one per simple.
struct ProjectiveSystem {
  AlgebraPtr A;
  Grades g;
  std::vector<Vec> idem;                    // degree-0 idempotents
  std::vector<std::vector<Vec>> pbasis;     // homogeneous basis of A e_i
  std::vector<std::vector<Degree>> pdeg;
  std::vector<fp::Subspace> pspace;
  std::vector<Vec> radgens;                 // homogeneous, span J mod J^2
  // lmul[j][i][t]: left multiplication by pbasis[i][t] on P(j)
  std::vector<std::vector<std::vector<Matrix>>> lmul;
  std::vector<std::vector<Matrix>> lidem;   // lidem[j][i]: e_i on P(j)
  std::vector<std::vector<Matrix>> lrad;    // lrad[j][r]: radgens[r] on P(j)

  int size() const { return int(idem.size()); }
  // idempotents default to one per iso class of simples
  static std::shared_ptr<const ProjectiveSystem> make(const AlgebraPtr& A, Grades g,
                                                      std::vector<Vec> idem = {});
};
using SystemPtr = std::shared_ptr<const ProjectiveSystem>;

struct Generator {
  int i;     // P(i)
  Degree d;  // placed in degree d
};

struct ResolutionTerm {
  std::vector<Generator> gens;
  std::vector<int> offset;  // start of each summand in flat coordinates
  int dim = 0;
  // image of each generator in the previous term (or in M for n = 0)
  std::vector<Vec> omega;
};

struct Resolution {
  SystemPtr sys;
  Module M;
  std::vector<ResolutionTerm> terms;
  bool complete = false;  // the resolution stops at terms.size()-1
};

Resolution minimal_resolution(const SystemPtr& sys, const Module& M, int nmax);
// image of each differential inside rad * (previous term)
bool check_minimality(const Resolution& R);
// when complete: alternating sum of dims of the terms equals dim M
bool check_euler(const Resolution& R);
// P_n as a module over A
Module resolution_term_module(const Resolution& R, int n);

struct ExtTable {
  std::map<std::pair<int, Degree>, int> entries;  // nonzero entries only
  int degree_bound = 0;
  int at(int n, const Degree& s) const;
  int at(int n, int r) const { return at(n, Degree{r}); }
  int row_sum(int n) const;
};

// ext^n(M, N<s>) for n <= nmax; R must reach nmax+1 unless complete
ExtTable ext_table(const Resolution& R, const Module& N, int nmax);
ExtTable ext_table(const SystemPtr& sys, const Module& M, const Module& N, int nmax);

// Ungraded Ext^n(M,N) for n <= nmax from a non-minimal free resolution.
// Shares nothing with the graded machinery; used as an oracle.
std::vector<int> ext_ungraded_free(const Module& M, const Module& N, int nmax);

}  // namespace kzl
