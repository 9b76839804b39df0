#include "kzl/koszul.hpp"

#include <algorithm>
#include <exception>
#include <memory>
#include <stdexcept>
#include <tuple>

#include "kzl/instances.hpp"
#include "kzl/structure.hpp"

namespace kzl {

namespace {

template <class Fn>
void parallel_for(int n, Fn f) {
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
#pragma omp critical(kzl_parallel_for)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

[[noreturn]] void not_qh(const std::string& why) {
  throw std::domain_error("not quasi-hereditary along this poset/order: " + why);
}

void validate_order(const std::vector<std::vector<char>>& leq, int k) {
  if (int(leq.size()) != k) throw std::invalid_argument("order: size mismatch");
  for (const auto& r : leq)
    if (int(r.size()) != k) throw std::invalid_argument("order: size mismatch");
  for (int i = 0; i < k; ++i) {
    if (!leq[i][i]) throw std::invalid_argument("order: not reflexive");
    for (int j = 0; j < k; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) throw std::invalid_argument("order: not antisymmetric");
      for (int l = 0; l < k; ++l)
        if (leq[i][j] && leq[j][l] && !leq[i][l]) throw std::invalid_argument("order: not transitive");
    }
  }
}

// P / (sum over mu not <= lambda of A e_mu P)
Module standard_quotient(const AlgebraPtr& A, const std::vector<Vec>& idem, const std::vector<std::vector<char>>& leq,
                         int lambda) {
  std::vector<Vec> basis;
  Module P = left_ideal_module(A, idem[lambda], &basis);
  std::vector<Vec> seeds;
  for (int mu = 0; mu < int(idem.size()); ++mu) {
    if (leq[mu][lambda]) continue;
    Matrix e = P.action(idem[mu]);
    for (int c = 0; c < P.dim; ++c) {
      Vec v = e.col_vec(c);
      if (!fp::is_zero(v)) seeds.push_back(v);
    }
  }
  fp::Subspace U = generated_submodule(P, seeds);
  return quotient_module(P, U.rows());
}

int action_rank(const Module& M, const Vec& e) { return fp::rank(M.F(), M.action(e)); }

int max_grade(const Module& M) {
  int m = 0;
  for (int g : M.grading) m = std::max(m, g);
  return m;
}

}  // namespace

std::vector<std::vector<char>> chain_order(int k) {
  std::vector<std::vector<char>> o(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) o[i][j] = 1;
  return o;
}

std::vector<std::vector<char>> discrete_order(int k) {
  std::vector<std::vector<char>> o(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) o[i][i] = 1;
  return o;
}

std::vector<int> composition_factors(const Module& M, const QHStructure& Q) {
  std::vector<int> c;
  for (int i = 0; i < Q.size(); ++i) {
    const Vec& e = Q.sys->idem[i];
    c.push_back(action_rank(M, e) / action_rank(Q.L[i], e));
  }
  return c;
}

QHStructure qh_structure(const AlgebraPtr& A, const std::vector<Vec>& idem,
                         const std::vector<std::vector<char>>& leq, const std::vector<std::string>& labels,
                         Grades g) {
  int k = int(idem.size());
  if (int(labels.size()) != k) throw std::invalid_argument("qh_structure: one label per idempotent");
  validate_order(leq, k);
  QHStructure Q;
  Q.A = A;
  Q.labels = labels;
  Q.leq = leq;
  Q.sys = ProjectiveSystem::make(A, g, idem);
  auto Aop = std::make_shared<const Algebra>(opposite(*A));
  fp::Subspace J = radical(*A);
  for (int i = 0; i < k; ++i) {
    Q.P.push_back(left_ideal_module(A, idem[i]));
    Q.Delta.push_back(standard_quotient(A, idem, leq, i));
    Q.Nabla.push_back(dual(standard_quotient(Aop, idem, leq, i), A));
    Q.L.push_back(inst::simple_top(A, idem[i], J));
  }
  for (int i = 0; i < k; ++i)
    if (action_rank(Q.L[i], idem[i]) == 0) not_qh("idempotent " + labels[i] + " kills its simple");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (action_rank(Q.L[i], idem[j]) != 0) not_qh("simples " + labels[i] + ", " + labels[j] + " coincide");
  long total = 0;
  for (int i = 0; i < k; ++i) {
    auto c = composition_factors(Q.Delta[i], Q);
    if (c[i] != 1) not_qh("[Delta(" + labels[i] + "):L(" + labels[i] + ")] != 1");
    for (int j = 0; j < k; ++j)
      if (c[j] && !leq[j][i]) not_qh("Delta(" + labels[i] + ") has a factor outside the ideal");
    total += long(Q.Delta[i].dim) * Q.Nabla[i].dim;
  }
  if (total != A->n) not_qh("dim A != sum dim Delta * dim Nabla");
  std::vector<std::tuple<int, int, int, int>> bad(size_t(k) * k, {0, 0, 0, 0});
  parallel_for(k * k, [&](int t) {
    int i = t / k, j = t % k;
    int h = int(hom_space(Q.Delta[i], Q.Nabla[j]).size());
    int e1 = ext_table(Q.sys, Q.Delta[i], Q.Nabla[j], 1).row_sum(1);
    bad[t] = {i, j, h, e1};
  });
  for (auto [i, j, h, e1] : bad) {
    if (h != (i == j ? 1 : 0)) not_qh("hom(Delta(" + labels[i] + "), Nabla(" + labels[j] + ")) has dim " + std::to_string(h));
    if (e1 != 0) not_qh("ext^1(Delta(" + labels[i] + "), Nabla(" + labels[j] + ")) != 0");
  }
  return Q;
}

GradedQH graded_qh(const AlgebraPtr& A, const std::vector<Vec>& idem, const std::vector<std::vector<char>>& leq,
                   const std::vector<std::string>& labels) {
  if (!A->graded()) throw std::invalid_argument("graded_qh: algebra is not graded");
  for (int d : A->grading)
    if (d < 0) throw std::invalid_argument("graded_qh: algebra is not positively graded");
  GradedQH G;
  Grades z{true, false};
  G.B = qh_structure(A, idem, leq, labels, z);
  G.zsys = G.B.sys;
  G.A0 = grade_zero(*A, z);
  std::vector<Vec> idem0;
  for (const auto& e : idem) idem0.push_back(embedded_coords(G.A0, e));
  G.B0 = qh_structure(G.A0.alg, idem0, leq, labels, Grades{});
  for (int i = 0; i < G.B.size(); ++i) {
    G.Delta0.push_back(inflate(G.B0.Delta[i], A, G.A0, z));
    G.Nabla0.push_back(inflate(G.B0.Nabla[i], A, G.A0, z));
  }
  G.L = G.B.L;
  return G;
}

Verdict diagonal_check(const std::string& property, const SystemPtr& sys, const std::vector<Module>& Ms,
                       const std::vector<Module>& Ns, int nmax, const std::vector<int>& mlabel,
                       const std::vector<int>& nlabel) {
  if (!sys->g.z || sys->g.x) throw std::invalid_argument("diagonal_check: needs the Z-grading alone");
  if (nmax < 0) throw std::invalid_argument("diagonal_check: N_max < 0");
  Verdict v;
  v.property = property;
  v.degree_bound = nmax;
  int a = int(Ms.size()), b = int(Ns.size());
  std::vector<Resolution> R(a);
  parallel_for(a, [&](int i) { R[i] = minimal_resolution(sys, Ms[i], nmax + 1); });
  std::vector<ExtTable> T(size_t(a) * b);
  parallel_for(a * b, [&](int t) { T[t] = ext_table(R[t / b], Ns[t % b], nmax); });
  std::optional<std::tuple<int, int, int, int, int>> best;
  for (int t = 0; t < a * b; ++t)
    for (const auto& [key, val] : T[t].entries) {
      int n = key.first, r = key.second.at(0);
      if (val == 0 || n == r || n > nmax) continue;
      auto cand = std::make_tuple(n, r, t / b, t % b, val);
      if (!best || cand < *best) best = cand;
    }
  if (best) {
    auto [n, r, i, j, val] = *best;
    v.holds = false;
    Counterexample c;
    c.n = n;
    c.r = r;
    c.lambda = mlabel.empty() ? i : mlabel[i];
    c.mu = nlabel.empty() ? j : nlabel[j];
    c.value = val;
    v.cx = c;
  }
  return v;
}

Verdict is_koszul(const AlgebraPtr& A, int nmax) {
  if (!A->graded()) throw std::invalid_argument("is_koszul: algebra is not graded");
  for (int d : A->grading)
    if (d < 0) throw std::invalid_argument("is_koszul: algebra is not positively graded");
  if (nmax < 0) nmax = A->n;
  Grades z{true, false};
  Embedded A0 = grade_zero(*A, z);
  if (radical(*A0.alg).dim() != 0) {
    Verdict v;
    v.property = "koszul";
    v.holds = false;
    v.degree_bound = nmax;
    v.note = "grade-0 subalgebra is not semisimple";
    return v;
  }
  auto sys = ProjectiveSystem::make(A, z);
  fp::Subspace J = radical(*A);
  std::vector<Module> L;
  for (const auto& e : sys->idem) L.push_back(inst::simple_top(A, e, J));
  return diagonal_check("koszul", sys, L, L, nmax);
}

Verdict is_qkoszul(const GradedQH& G, int nmax) {
  if (nmax < 0) nmax = G.B.A->n;
  return diagonal_check("qkoszul", G.zsys, G.Delta0, G.Nabla0, nmax);
}

Verdict is_standard_qkoszul(const GradedQH& G, int nmax) {
  if (nmax < 0) nmax = G.B.A->n;
  for (int i = 0; i < G.B.size(); ++i) {
    if (!G.B.Delta[i].graded() || !G.B.Nabla[i].graded())
      throw std::invalid_argument("sqkoszul: standard modules must be graded");
    for (int d : G.B.Delta[i].grading)
      if (d < 0) throw std::invalid_argument("sqkoszul: Delta not in non-negative grades");
    for (int d : G.B.Nabla[i].grading)
      if (d > 0) throw std::invalid_argument("sqkoszul: Nabla not in non-positive grades");
  }
  Verdict a = diagonal_check("sqkoszul", G.zsys, G.B.Delta, G.Nabla0, nmax);
  if (!a.holds) {
    a.note = "ext(Delta_B, Nabla_0) off the diagonal";
    return a;
  }
  Verdict b = diagonal_check("sqkoszul", G.zsys, G.Delta0, G.B.Nabla, nmax);
  if (!b.holds) {
    b.note = "ext(Delta^0, Nabla_B) off the diagonal";
    return b;
  }
  Verdict c = is_qkoszul(G, nmax);
  c.property = "sqkoszul";
  if (!c.holds) c.note = "not Q-Koszul";
  return c;
}

std::string to_string(Linearity k) {
  switch (k) {
    case Linearity::linear: return "linear";
    case Linearity::qlinear: return "q-linear";
    case Linearity::qcolinear: return "q-colinear";
    case Linearity::strongly_linear: return "strongly-linear";
    case Linearity::strongly_colinear: return "strongly-colinear";
  }
  return "?";
}

Linearity linearity_from_string(const std::string& s) {
  for (auto k : {Linearity::linear, Linearity::qlinear, Linearity::qcolinear, Linearity::strongly_linear,
                 Linearity::strongly_colinear})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown linearity kind: " + s);
}

Verdict linearity_check(const Module& M, Linearity kind, const GradedQH& G, int nmax) {
  if (!M.graded()) throw std::invalid_argument("linearity_check: module is not graded");
  if (M.A != G.B.A) throw std::invalid_argument("linearity_check: module over a different algebra");
  if (nmax < 0) nmax = G.B.A->n;
  bool colinear = kind == Linearity::qcolinear || kind == Linearity::strongly_colinear;
  for (int d : M.grading)
    if (colinear ? d > 0 : d < 0) throw std::invalid_argument("linearity_check: grading sign violation");
  std::vector<int> all;
  for (int i = 0; i < G.B.size(); ++i) all.push_back(i);
  std::string name = to_string(kind);
  switch (kind) {
    case Linearity::linear: return diagonal_check(name, G.zsys, {M}, G.L, nmax, {-1}, all);
    case Linearity::qlinear: return diagonal_check(name, G.zsys, {M}, G.Nabla0, nmax, {-1}, all);
    case Linearity::strongly_linear: return diagonal_check(name, G.zsys, {M}, G.B.Nabla, nmax, {-1}, all);
    case Linearity::qcolinear: return diagonal_check(name, G.zsys, G.Delta0, {M}, nmax, all, {-1});
    case Linearity::strongly_colinear: return diagonal_check(name, G.zsys, G.B.Delta, {M}, nmax, all, {-1});
  }
  throw std::logic_error("linearity_check");
}

namespace {

Module restrict_indices(const Module& M, const std::vector<int>& keep, int shift_by) {
  Module R;
  R.A = M.A;
  R.dim = int(keep.size());
  for (const auto& m : M.act) {
    Matrix r(R.dim, R.dim);
    for (int a = 0; a < R.dim; ++a)
      for (int b = 0; b < R.dim; ++b) r(a, b) = m(keep[a], keep[b]);
    R.act.push_back(std::move(r));
  }
  for (int k : keep) R.grading.push_back(M.grading[k] + shift_by);
  if (M.xgraded())
    for (int k : keep) R.xgrading.push_back(M.xgrading[k]);
  return R;
}

}  // namespace

Module truncate_shift(const Module& M, int i) {
  if (i < 0) throw std::invalid_argument("truncate_shift: i < 0");
  if (!M.graded()) throw std::invalid_argument("truncate_shift: module is not graded");
  std::vector<int> keep;
  std::vector<char> in(M.dim, 0);
  for (int k = 0; k < M.dim; ++k)
    if (M.grading[k] >= i) {
      keep.push_back(k);
      in[k] = 1;
    }
  for (const auto& m : M.act)
    for (int c : keep)
      for (int r = 0; r < M.dim; ++r)
        if (!in[r] && m(r, c)) throw std::invalid_argument("truncate_shift: grades >= i are not a submodule");
  return restrict_indices(M, keep, -i);
}

Module cotruncate_shift(const Module& N, int i) {
  if (i < 0) throw std::invalid_argument("cotruncate_shift: i < 0");
  if (!N.graded()) throw std::invalid_argument("cotruncate_shift: module is not graded");
  std::vector<int> keep;
  std::vector<char> in(N.dim, 0);
  for (int k = 0; k < N.dim; ++k)
    if (N.grading[k] <= -i) {
      keep.push_back(k);
      in[k] = 1;
    }
  for (const auto& m : N.act)
    for (int c = 0; c < N.dim; ++c)
      if (!in[c])
        for (int r : keep)
          if (m(r, c)) throw std::invalid_argument("cotruncate_shift: grades > -i are not a submodule");
  return restrict_indices(N, keep, i);
}

DeltaFiltration has_delta_filtration(const Module& M, const QHStructure& Q) {
  if (Q.sys->g.z && !M.graded()) throw std::invalid_argument("has_delta_filtration: module is not graded");
  int k = Q.size();
  DeltaFiltration D;
  D.mult.assign(k, 0);
  std::vector<int> e1(k);
  parallel_for(k, [&](int j) {
    e1[j] = ext_table(Q.sys, M, Q.Nabla[j], 1).row_sum(1);
    D.mult[j] = int(hom_space(M, Q.Nabla[j]).size());
  });
  D.holds = std::all_of(e1.begin(), e1.end(), [](int x) { return x == 0; });
  return D;
}

std::optional<std::vector<int>> delta_multiplicities_greedy(const Module& M, const QHStructure& Q) {
  int k = Q.size();
  std::vector<int> rest = composition_factors(M, Q);
  std::vector<std::vector<int>> cd;
  for (int i = 0; i < k; ++i) cd.push_back(composition_factors(Q.Delta[i], Q));
  std::vector<int> mult(k, 0);
  std::vector<char> done(k, 0);
  for (int step = 0; step < k; ++step) {
    // a maximal element among the remaining ones
    int top = -1;
    for (int i = 0; i < k && top < 0; ++i) {
      if (done[i]) continue;
      bool maximal = true;
      for (int j = 0; j < k; ++j)
        if (!done[j] && j != i && Q.leq[i][j]) maximal = false;
      if (maximal) top = i;
    }
    done[top] = 1;
    int m = rest[top];
    if (m < 0) return std::nullopt;
    mult[top] = m;
    for (int j = 0; j < k; ++j) rest[j] -= m * cd[top][j];
  }
  for (int r : rest)
    if (r != 0) return std::nullopt;
  return mult;
}

Module grade_piece(const Module& M, const Embedded& A0, int i) {
  if (!M.graded()) throw std::invalid_argument("grade_piece: module is not graded");
  std::vector<int> keep;
  for (int k = 0; k < M.dim; ++k)
    if (M.grading[k] == i) keep.push_back(k);
  Module R;
  R.A = A0.alg;
  R.dim = int(keep.size());
  for (const auto& b : A0.basis) {
    Matrix m = M.action(b);
    Matrix r(R.dim, R.dim);
    for (int a = 0; a < R.dim; ++a)
      for (int c = 0; c < R.dim; ++c) r(a, c) = m(keep[a], keep[c]);
    R.act.push_back(std::move(r));
  }
  if (M.xgraded())
    for (int k : keep) R.xgrading.push_back(M.xgrading[k]);
  return R;
}

Prop41Report verify_prop41(const Module& M, const GradedQH& G, int nmax) {
  Prop41Report rep;
  if (!M.graded()) throw std::invalid_argument("verify_prop41: module is not graded");
  for (int d : M.grading)
    if (d < 0) {
      rep.reason = "hypotheses not met: negative grades";
      return rep;
    }
  if (!is_qkoszul(G, nmax).holds) {
    rep.reason = "hypotheses not met: B is not Q-Koszul";
    return rep;
  }
  Verdict q = linearity_check(M, Linearity::qlinear, G, nmax);
  if (!q.holds) {
    rep.reason = "hypotheses not met: M is not q-linear";
    return rep;
  }
  int top = max_grade(M);
  for (int i = 0; i <= top; ++i) {
    Module Mi = grade_piece(M, G.A0, i);
    if (Mi.dim == 0) continue;
    if (!has_delta_filtration(Mi, G.B0).holds) {
      rep.reason = "hypotheses not met: grade " + std::to_string(i) + " has no Delta^0-filtration";
      return rep;
    }
  }
  rep.hypotheses = true;
  rep.holds = true;
  for (int i = 0; i <= top; ++i) {
    Verdict v = linearity_check(truncate_shift(M, i), Linearity::qlinear, G, nmax);
    v.note = "truncation " + std::to_string(i);
    rep.holds = rep.holds && v.holds;
    rep.truncations.push_back(v);
  }
  if (!rep.holds) rep.reason = "a truncation is not q-linear";
  return rep;
}

ParityReport parity_checks(const std::vector<std::vector<ExtTable>>& tables,
                           const std::function<std::optional<int>(int, int, const Degree&)>& ldiff, int nmax) {
  ParityReport rep;
  for (int i = 0; i < int(tables.size()); ++i)
    for (int j = 0; j < int(tables[i].size()); ++j) {
      const ExtTable& T = tables[i][j];
      for (const auto& [key, val] : T.entries) {
        if (val == 0 || key.first > nmax) continue;
        auto d = ldiff(i, j, key.second);
        if (!d) throw std::invalid_argument("parity_checks: missing length for simple pair");
        if (((key.first - *d) % 2 + 2) % 2 != 0) {
          rep.kl_property = false;
          rep.violations.push_back("kl: ext^" + std::to_string(key.first) + "(" + std::to_string(i) + "," +
                                   std::to_string(j) + ") with length difference " + std::to_string(*d));
        }
      }
      int bound = std::min(nmax, T.degree_bound);
      for (int n = 0; n < bound; ++n)
        if (T.row_sum(n) && T.row_sum(n + 1)) {
          rep.even_odd = false;
          rep.violations.push_back("even-odd: ext^" + std::to_string(n) + " and ext^" + std::to_string(n + 1) +
                                   " of (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
  return rep;
}

}  // namespace kzl
