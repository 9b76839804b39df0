#pragma once
// Quasi-hereditary structure along a declared order and bounded-degree
// checkers built on graded Ext tables: Koszul, Q-Koszul, standard Q-Koszul,
// (Q-/strong) linearity and colinearity, truncations, Delta-filtrations and
// the parity tests for block algebras.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kzl/algebra.hpp"
#include "kzl/resolution.hpp"

namespace kzl {

struct QHStructure {
  AlgebraPtr A;
  SystemPtr sys;  // P(i) = A e_i
  std::vector<std::string> labels;
  std::vector<std::vector<char>> leq;  // leq[i][j]: i <= j
  std::vector<Module> P, Delta, Nabla, L;
  int size() const { return int(labels.size()); }
};

// `idem` are primitive idempotents of degree 0 (one per simple); `leq` a
// partial order on their indices. Throws std::domain_error when the
// quasi-heredity witnesses fail.
QHStructure qh_structure(const AlgebraPtr& A, const std::vector<Vec>& idem,
                         const std::vector<std::vector<char>>& leq, const std::vector<std::string>& labels,
                         Grades g = {});

// order helpers
std::vector<std::vector<char>> chain_order(int k);  // 0 < 1 < ... < k-1
std::vector<std::vector<char>> discrete_order(int k);

// B graded with its grade-zero part B0; Delta0/Nabla0 are the B0 (co)standards
// inflated to B in grade 0.
struct GradedQH {
  QHStructure B;
  Embedded A0;
  QHStructure B0;
  std::vector<Module> Delta0, Nabla0, L;  // over B, grade 0
  SystemPtr zsys;                         // Z-graded projectives of B
};
GradedQH graded_qh(const AlgebraPtr& A, const std::vector<Vec>& idem, const std::vector<std::vector<char>>& leq,
                   const std::vector<std::string>& labels);

struct Counterexample {
  int n = 0, r = 0;
  int lambda = -1, mu = -1;  // indices into the label list (-1: the tested module)
  int value = 0;
};

struct Verdict {
  std::string property;
  bool holds = true;
  int degree_bound = 0;
  std::optional<Counterexample> cx;
  std::string note;
};

// ext^n(M_a, N_b<r>) != 0 => n = r for all pairs, n <= nmax; the first
// violation in (n, r, a, b) order is reported.
Verdict diagonal_check(const std::string& property, const SystemPtr& sys, const std::vector<Module>& Ms,
                       const std::vector<Module>& Ns, int nmax, const std::vector<int>& mlabel = {},
                       const std::vector<int>& nlabel = {});

// grade-0 semisimple and simples on the diagonal
Verdict is_koszul(const AlgebraPtr& A, int nmax = -1);
Verdict is_qkoszul(const GradedQH& G, int nmax = -1);
Verdict is_standard_qkoszul(const GradedQH& G, int nmax = -1);

enum class Linearity { linear, qlinear, qcolinear, strongly_linear, strongly_colinear };
std::string to_string(Linearity k);
Linearity linearity_from_string(const std::string& s);
Verdict linearity_check(const Module& M, Linearity kind, const GradedQH& G, int nmax = -1);

// M_{>=i} regraded to start in grade 0
Module truncate_shift(const Module& M, int i);
// (N / N_{>-i})<i> for a non-positively graded N
Module cotruncate_shift(const Module& N, int i);

struct DeltaFiltration {
  bool holds = false;
  std::vector<int> mult;  // (M : Delta(i))
};
// Ext^1(M, Nabla) = 0 for all Nabla; ungraded
DeltaFiltration has_delta_filtration(const Module& M, const QHStructure& Q);
// unitriangular solve on composition factors, top of the order first;
// nullopt if some coefficient goes negative
std::optional<std::vector<int>> delta_multiplicities_greedy(const Module& M, const QHStructure& Q);
std::vector<int> composition_factors(const Module& M, const QHStructure& Q);

// the grade-i piece of M as a module over the grade-zero subalgebra
Module grade_piece(const Module& M, const Embedded& A0, int i);

struct Prop41Report {
  bool hypotheses = false;
  std::string reason;
  bool holds = false;
  std::vector<Verdict> truncations;
};
Prop41Report verify_prop41(const Module& M, const GradedQH& G, int nmax = -1);

struct ParityReport {
  bool kl_property = true;
  bool even_odd = true;
  std::vector<std::string> violations;
};
// tables[i][j] = ext(L_i, L_j) with an arbitrary degree key; ldiff(i, j, s)
// returns l(lambda_i) - l(mu) for the shift s, or nullopt when the length is
// unknown (an error).
ParityReport parity_checks(const std::vector<std::vector<ExtTable>>& tables,
                           const std::function<std::optional<int>(int, int, const Degree&)>& ldiff, int nmax);

}  // namespace kzl
