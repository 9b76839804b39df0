#pragma once
// SL_2 instances: the restricted enveloping algebra u = u(sl_2) over F_p with
// its X-grading and integral form, restricted simples, baby Verma modules,
// the coinduced modules Phi(lambda), Schur algebras S(2,d), Weyl modules and
// character bookkeeping.
//
// Weights are integers (coordinate of the fundamental weight); alpha = 2.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kzl/algebra.hpp"
#include "kzl/forced.hpp"
#include "kzl/koszul.hpp"
#include "kzl/resolution.hpp"
#include "kzl/structure.hpp"

namespace kzl::sl2 {

// weight -> multiplicity
using Character = std::map<int, int>;

// u over F_p on the basis f^c 1_k e^a (0 <= a, c < p, k in Z/p), where 1_k
// are the weight idempotents of F_p[h]/(h^p - h).
struct UAlgebra {
  int p = 0;
  AlgebraPtr alg;
  std::shared_ptr<const LatticeAlgebra> lattice;  // same basis over Z_(p)
  std::vector<Vec> tau;  // anti-involution e <-> f, fixing 1_k
  int index(int c, int k, int a) const { return (c * p + k) * p + a; }
  Vec e() const;
  Vec f() const;
  Vec h() const;
  Vec idem(int k) const;
};

UAlgebra build_u(int p);

// X-graded u-module from the actions of e, f and the weights of a basis
Module module_from_ef(const UAlgebra& U, const Matrix& E, const Matrix& F, const std::vector<int>& wts);

Module simple_module(const UAlgebra& U, int lambda);
enum class Variant { Z, Zprime };
Module baby_verma(const UAlgebra& U, int lambda, Variant v);
// u 1_lambda with weights lambda + (X-weight of the basis element)
Module coinduced_phi(const UAlgebra& U, int lambda);
// contravariant dual twisted by tau (weights preserved)
Module contravariant_dual(const UAlgebra& U, const Module& M);
// restriction to u of the Weyl module of highest weight m (divided powers)
Module weyl_module(const UAlgebra& U, int m);

int weight_dim(const Module& M, int w);
Character character(const Module& M);

// restricted weights grouped by block (via central idempotents)
std::vector<std::vector<int>> u_blocks(const UAlgebra& U);

// Basic algebra of a block of u, X-graded, with one idempotent per simple.
struct UBlock {
  std::vector<int> weights;   // highest weight of each simple
  std::vector<int> vec_weight;  // X-weight of e_i L(weights[i])
  Embedded basic;             // inside u
  std::vector<Vec> idem;      // in basic coordinates
  std::vector<Module> simples;  // X-graded, over basic
};

struct UStructure {
  UAlgebra U;
  BasicData data;  // X-homogeneous idempotents
  std::vector<std::vector<int>> blocks;
};
UStructure analyse_u(int p);
UBlock u_block(const UStructure& S, const std::vector<int>& block);
// blocks of size > 1 (the Steinberg weight p-1 is alone)
std::vector<std::vector<int>> regular_blocks(const UStructure& S);

// X-graded ext^n(L_i, L_j<s>) over the basic algebra, n <= nmax
std::vector<std::vector<ExtTable>> block_ext_tables(const UBlock& B, int nmax);
// parity of the block: a nonzero ext^n(L_i, L_j<s>) is
// Ext_{G_1T}(L(lambda_i), L(lambda_j + s)) with s in pX, compared against
// the alcove lengths of lambda_i and lambda_j + s
ParityReport block_parity(const UBlock& B, int p, const std::vector<std::vector<ExtTable>>& tables, int nmax);
// weights -s/p of the X-shifts s in row n (only s in pX contribute)
Character untwisted_ext_character(const ExtTable& T, int n, int p);

// Schur algebra S(2,d): orbit sums xi_A over 2x2 matrices A with entries
// summing to d, indexed in the order of `types`.
struct SchurAlgebra {
  int d = 0, p = 0;
  AlgebraPtr alg;
  std::shared_ptr<const LatticeAlgebra> lattice;
  std::vector<std::array<int, 4>> types;  // a11, a12, a21, a22
  std::map<int, Vec> weight_idem;          // m = n1 - n2 -> 1_m
};
SchurAlgebra schur_algebra(int d, int p);

// Radical-graded basic algebra of A_Gamma = S(2,d)/S e S, e = sum of 1_m with |m| outside Gamma.
struct SchurInstance {
  int d = 0, p = 0;
  std::vector<int> gamma;
  AlgebraPtr quotient;      // A_Gamma
  AlgebraPtr basic;         // basic algebra (ungraded)
  AlgebraPtr graded;        // radical grading of the basic algebra
  std::vector<Vec> idem;    // in graded coordinates, one per simple
  std::vector<int> labels;  // highest weight of each simple
};
SchurInstance schur_instance(int d, int p, const std::vector<int>& gamma);
// dominance on highest weights: mu <= lambda iff lambda - mu in 2N
std::vector<std::vector<char>> dominance_order(const std::vector<int>& weights);
GradedQH schur_graded_qh(const SchurInstance& I);

Character weyl_character(int m);
Character simple_character(int lambda, int p);
// chi(L(g0)) * chi(Delta(g1))^[1], g = g0 + p g1, 0 <= g0 < p
Character delta_p_character(int gamma, int p);
Character add(const Character& a, const Character& b, int sign = 1);
int dimension(const Character& c);

// Greedy top-down decomposition of chi(Delta(m)) into chi(Delta^p(gamma)).
// Throws std::logic_error if the remainder is not a character.
std::vector<int> delta_p_decomposition(int m, int p);

struct NablaTest {
  bool holds = false;
  std::map<int, int> mult;  // m -> multiplicity of chi(nabla(m))
  Character remainder;
};
NablaTest nabla_character_test(const Character& chi);

}  // namespace kzl::sl2
