#include "kzl/algebra.hpp"

#include <deque>
#include <functional>
#include <random>
#include <stdexcept>

namespace kzl {

Vec Algebra::unit(int i) const {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  std::vector<u64> acc(n, 0);
  const u64 p = F.p;
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < n; ++j) {
      if (!y[j]) continue;
      u64 xy = u64(x[i]) * y[j] % p;
      for (const auto& t : prod(i, j)) acc[t.k] = (acc[t.k] + xy * t.c) % p;
    }
  }
  Vec r(n);
  for (int k = 0; k < n; ++k) r[k] = u32(acc[k]);
  return r;
}

Vec Algebra::add(const Vec& x, const Vec& y) const {
  Vec r(n);
  for (int i = 0; i < n; ++i) r[i] = F.add(x[i], y[i]);
  return r;
}

Vec Algebra::sub(const Vec& x, const Vec& y) const {
  Vec r(n);
  for (int i = 0; i < n; ++i) r[i] = F.sub(x[i], y[i]);
  return r;
}

Vec Algebra::scale(const Vec& x, u32 c) const {
  Vec r(n);
  for (int i = 0; i < n; ++i) r[i] = F.mul(x[i], c);
  return r;
}

Vec Algebra::pow(const Vec& x, u64 e) const {
  Vec r = one, b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

Matrix Algebra::left(const Vec& x) const {
  Matrix L(n, n);
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < n; ++j)
      for (const auto& t : prod(i, j)) L(t.k, j) = F.add(L(t.k, j), F.mul(x[i], t.c));
  }
  return L;
}

Matrix Algebra::right(const Vec& x) const {
  Matrix R(n, n);
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < n; ++j)
      for (const auto& t : prod(j, i)) R(t.k, j) = F.add(R(t.k, j), F.mul(x[i], t.c));
  }
  return R;
}

Matrix Algebra::left_basis(int i) const {
  Matrix L(n, n);
  for (int j = 0; j < n; ++j)
    for (const auto& t : prod(i, j)) L(t.k, j) = t.c;
  return L;
}

std::vector<int> Algebra::generator_indices() const {
  if (!gens.empty()) return gens;
  std::vector<int> g(n);
  for (int i = 0; i < n; ++i) g[i] = i;
  return g;
}

Degree Algebra::degree(int i, Grades g) const {
  Degree d;
  if (g.z) d.push_back(graded() ? grading[i] : 0);
  if (g.x) {
    if (xgraded())
      d.insert(d.end(), xgrading[i].begin(), xgrading[i].end());
    else
      throw std::invalid_argument("algebra has no X-grading");
  }
  return d;
}

void Algebra::check() const {
  if (int(sc.size()) != n * n) throw std::logic_error("structure constant table size");
  if (int(one.size()) != n) throw std::logic_error("identity size");
  // unit
  for (int i = 0; i < n; ++i) {
    Vec b = unit(i);
    if (mul(one, b) != b || mul(b, one) != b) throw std::logic_error("identity is not a unit");
  }
  // associativity: (b_i b_j) b_k = b_i (b_j b_k)
  std::vector<Matrix> L(n);
  for (int i = 0; i < n; ++i) L[i] = left_basis(i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // L_{b_i b_j} = L_{b_i} L_{b_j}, compared column by column
      for (int k = 0; k < n; ++k) {
        std::vector<u64> lhs(n, 0);
        for (const auto& t : prod(i, j))
          for (const auto& s : prod(t.k, k)) lhs[s.k] = (lhs[s.k] + u64(t.c) * s.c) % F.p;
        std::vector<u64> rhs(n, 0);
        for (const auto& t : prod(j, k))
          for (const auto& s : prod(i, t.k)) rhs[s.k] = (rhs[s.k] + u64(t.c) * s.c) % F.p;
        if (lhs != rhs)
          throw std::logic_error("associativity fails at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  if (graded()) {
    if (int(grading.size()) != n) throw std::logic_error("grading size");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& t : prod(i, j))
          if (grading[t.k] != grading[i] + grading[j])
            throw std::logic_error("structure constants violate the grading");
  }
  if (xgraded()) {
    if (int(xgrading.size()) != n) throw std::logic_error("x_grading size");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& t : prod(i, j))
          if (xgrading[t.k] != deg_add(xgrading[i], xgrading[j]))
            throw std::logic_error("structure constants violate the X-grading");
  }
}

Matrix Module::action(const Vec& x) const {
  Matrix m(dim, dim);
  for (int k = 0; k < A->n; ++k)
    if (x[k]) fp::axpy(F(), m, x[k], act[k]);
  return m;
}

Vec Module::apply(const Vec& x, const Vec& v) const {
  Vec r(dim, 0);
  for (int k = 0; k < A->n; ++k)
    if (x[k]) fp::axpy(F(), r, x[k], fp::apply(F(), act[k], v));
  return r;
}

Degree Module::degree(int i, Grades g) const {
  Degree d;
  if (g.z) d.push_back(graded() ? grading[i] : 0);
  if (g.x) {
    if (!xgraded()) throw std::invalid_argument("module has no X-grading");
    d.insert(d.end(), xgrading[i].begin(), xgrading[i].end());
  }
  return d;
}

void Module::check() const {
  const Algebra& B = *A;
  if (int(act.size()) != B.n) throw std::logic_error("module: action table size");
  for (const auto& m : act)
    if (m.rows != dim || m.cols != dim) throw std::logic_error("module: action shape");
  if (!(action(B.one) == Matrix::identity(dim))) throw std::logic_error("module: unit acts non-trivially");
  for (int i = 0; i < B.n; ++i)
    for (int j = 0; j < B.n; ++j) {
      Matrix lhs = fp::multiply(F(), act[i], act[j], fp::Exec::serial);
      Matrix rhs(dim, dim);
      for (const auto& t : B.prod(i, j)) fp::axpy(F(), rhs, t.c, act[t.k]);
      if (!(lhs == rhs)) throw std::logic_error("module: action is not a homomorphism");
    }
  if (graded() && B.graded()) {
    for (int k = 0; k < B.n; ++k)
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
          if (act[k](r, c) && grading[r] != grading[c] + B.grading[k])
            throw std::logic_error("module: grading incompatible");
  }
  if (xgraded() && B.xgraded()) {
    for (int k = 0; k < B.n; ++k)
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
          if (act[k](r, c) && xgrading[r] != deg_add(xgrading[c], B.xgrading[k]))
            throw std::logic_error("module: X-grading incompatible");
  }
}

Degree deg_add(const Degree& a, const Degree& b) {
  Degree c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Degree deg_sub(const Degree& a, const Degree& b) {
  Degree c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

bool deg_zero(const Degree& a) {
  for (int v : a)
    if (v) return false;
  return true;
}

Algebra make_algebra(const Field& F, int n, const std::vector<std::string>& labels,
                     const std::function<Vec(int, int)>& prod) {
  Algebra A;
  A.F = F;
  A.n = n;
  A.labels = labels;
  if (A.labels.empty())
    for (int i = 0; i < n; ++i) A.labels.push_back("b" + std::to_string(i));
  A.sc.resize(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec v = prod(i, j);
      for (int k = 0; k < n; ++k)
        if (v[k]) A.sc[size_t(i) * n + j].push_back({k, v[k]});
    }
  return A;
}

namespace {

// grading data of a homogeneous echelon basis, read at the pivot coordinate
void inherit_gradings(const Algebra& A, const fp::Subspace& S, Algebra& B) {
  const auto& rows = S.rows();
  const auto& piv = S.pivots();
  auto homogeneous = [&](auto deg) {
    for (size_t r = 0; r < rows.size(); ++r)
      for (int k = 0; k < A.n; ++k)
        if (rows[r][k] && deg(k) != deg(piv[r])) return false;
    return true;
  };
  if (A.graded() && homogeneous([&](int k) { return A.grading[k]; })) {
    B.grading.resize(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) B.grading[r] = A.grading[piv[r]];
  }
  if (A.xgraded() && homogeneous([&](int k) { return A.xgrading[k]; })) {
    B.xgrading.resize(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) B.xgrading[r] = A.xgrading[piv[r]];
  }
}

}  // namespace

Embedded subalgebra(const Algebra& A, const std::vector<Vec>& basis, const Vec& unit) {
  fp::Subspace S = fp::span(A.F, A.n, basis);
  const auto& rows = S.rows();
  int m = S.dim();
  Algebra B;
  B.F = A.F;
  B.n = m;
  for (int i = 0; i < m; ++i) {
    int pv = S.pivots()[i];
    B.labels.push_back(A.labels[pv]);
  }
  B.sc.resize(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec v = A.mul(rows[i], rows[j]);
      if (!S.contains(v)) throw std::invalid_argument("subalgebra: span not closed under products");
      Vec c = S.coords(v);
      for (int k = 0; k < m; ++k)
        if (c[k]) B.sc[size_t(i) * m + j].push_back({k, c[k]});
    }
  if (!S.contains(unit)) throw std::invalid_argument("subalgebra: unit not in span");
  B.one = S.coords(unit);
  inherit_gradings(A, S, B);
  Embedded E;
  E.alg = std::make_shared<const Algebra>(std::move(B));
  E.basis = rows;
  return E;
}

Vec embedded_coords(const Embedded& E, const Vec& x) {
  fp::Subspace S = fp::span(E.alg->F, int(x.size()), E.basis);
  if (S.rows() != E.basis) throw std::logic_error("embedded_coords: basis not in echelon form");
  if (!S.contains(x)) throw std::invalid_argument("embedded_coords: element outside the subalgebra");
  return S.coords(x);
}

bool is_idempotent(const Algebra& A, const Vec& e) { return A.mul(e, e) == e; }

Embedded corner(const Algebra& A, const Vec& e) {
  if (!is_idempotent(A, e)) throw std::invalid_argument("corner: element is not idempotent");
  std::vector<Vec> vs;
  for (int k = 0; k < A.n; ++k) vs.push_back(A.mul(A.mul(e, A.unit(k)), e));
  return subalgebra(A, vs, e);
}

Embedded grade_zero(const Algebra& A, Grades g) {
  std::vector<Vec> vs;
  for (int k = 0; k < A.n; ++k)
    if (deg_zero(A.degree(k, g))) vs.push_back(A.unit(k));
  return subalgebra(A, vs, A.one);
}

Algebra opposite(const Algebra& A) {
  Algebra B = A;
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) B.sc[size_t(i) * A.n + j] = A.prod(j, i);
  for (auto& l : B.labels) l += "^op";
  return B;
}

Vec QuotientMap::project(const Vec& x) const {
  Vec r = ideal.reduce(x);
  Vec out(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) out[i] = r[keep[i]];
  return out;
}

QuotientMap quotient(const Algebra& A, const fp::Subspace& I) {
  QuotientMap Q;
  Q.ideal = I;
  std::vector<char> piv(A.n, 0);
  for (int c : I.pivots()) piv[c] = 1;
  for (int k = 0; k < A.n; ++k)
    if (!piv[k]) Q.keep.push_back(k);
  int m = int(Q.keep.size());
  Algebra B;
  B.F = A.F;
  B.n = m;
  B.sc.resize(size_t(m) * m);
  for (int i = 0; i < m; ++i) B.labels.push_back(A.labels[Q.keep[i]]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec c = Q.project(A.mul(A.unit(Q.keep[i]), A.unit(Q.keep[j])));
      for (int k = 0; k < m; ++k)
        if (c[k]) B.sc[size_t(i) * m + j].push_back({k, c[k]});
    }
  B.one = Q.project(A.one);
  if (A.graded())
    for (int k : Q.keep) B.grading.push_back(A.grading[k]);
  if (A.xgraded())
    for (int k : Q.keep) B.xgrading.push_back(A.xgrading[k]);
  Q.alg = std::make_shared<const Algebra>(std::move(B));
  return Q;
}

fp::Subspace ideal_generated(const Algebra& A, const std::vector<Vec>& xs) {
  fp::Subspace S(A.F, A.n);
  std::deque<Vec> todo;
  for (const auto& x : xs)
    if (S.add(x)) todo.push_back(x);
  auto g = A.generator_indices();
  while (!todo.empty()) {
    Vec v = todo.front();
    todo.pop_front();
    for (int k : g) {
      Vec a = A.mul(A.unit(k), v), b = A.mul(v, A.unit(k));
      if (S.add(a)) todo.push_back(a);
      if (S.add(b)) todo.push_back(b);
    }
  }
  return S;
}

Module regular_module(const AlgebraPtr& A) {
  Module M;
  M.A = A;
  M.dim = A->n;
  for (int k = 0; k < A->n; ++k) M.act.push_back(A->left_basis(k));
  M.grading = A->grading;
  M.xgrading = A->xgrading;
  return M;
}

namespace {

Module module_on_subspace(const AlgebraPtr& A, const fp::Subspace& S,
                          const std::function<Vec(int, const Vec&)>& act,
                          const std::vector<int>* gr_amb, const std::vector<IVec>* xg_amb) {
  Module M;
  M.A = A;
  M.dim = S.dim();
  const auto& rows = S.rows();
  for (int k = 0; k < A->n; ++k) {
    Matrix m(M.dim, M.dim);
    for (int t = 0; t < M.dim; ++t) {
      Vec img = act(k, rows[t]);
      if (!S.contains(img)) throw std::invalid_argument("subspace is not a submodule");
      Vec c = S.coords(img);
      for (int r = 0; r < M.dim; ++r) m(r, t) = c[r];
    }
    M.act.push_back(std::move(m));
  }
  auto homogeneous = [&](auto deg) {
    for (int r = 0; r < M.dim; ++r)
      for (size_t k = 0; k < rows[r].size(); ++k)
        if (rows[r][k] && deg(int(k)) != deg(S.pivots()[r])) return false;
    return true;
  };
  if (gr_amb && !gr_amb->empty() && homogeneous([&](int k) { return (*gr_amb)[k]; }))
    for (int r = 0; r < M.dim; ++r) M.grading.push_back((*gr_amb)[S.pivots()[r]]);
  if (xg_amb && !xg_amb->empty() && homogeneous([&](int k) { return (*xg_amb)[k]; }))
    for (int r = 0; r < M.dim; ++r) M.xgrading.push_back((*xg_amb)[S.pivots()[r]]);
  return M;
}

}  // namespace

Module left_ideal_module(const AlgebraPtr& A, const Vec& e, std::vector<Vec>* basis) {
  std::vector<Vec> vs;
  for (int k = 0; k < A->n; ++k) vs.push_back(A->mul(A->unit(k), e));
  fp::Subspace S = fp::span(A->F, A->n, vs);
  if (basis) *basis = S.rows();
  return module_on_subspace(
      A, S, [&](int k, const Vec& v) { return A->mul(A->unit(k), v); }, &A->grading, &A->xgrading);
}

Module submodule(const Module& M, const std::vector<Vec>& spanning) {
  fp::Subspace S = fp::span(M.F(), M.dim, spanning);
  return module_on_subspace(
      M.A, S, [&](int k, const Vec& v) { return fp::apply(M.F(), M.act[k], v); }, &M.grading,
      &M.xgrading);
}

Module quotient_module(const Module& M, const std::vector<Vec>& spanning) {
  fp::Subspace U = fp::span(M.F(), M.dim, spanning);
  std::vector<char> piv(M.dim, 0);
  for (int c : U.pivots()) piv[c] = 1;
  std::vector<int> keep;
  for (int k = 0; k < M.dim; ++k)
    if (!piv[k]) keep.push_back(k);
  Module Q;
  Q.A = M.A;
  Q.dim = int(keep.size());
  for (int k = 0; k < M.A->n; ++k) {
    Matrix m(Q.dim, Q.dim);
    for (int t = 0; t < Q.dim; ++t) {
      Vec img = U.reduce(M.act[k].col_vec(keep[t]));
      for (int r = 0; r < Q.dim; ++r) m(r, t) = img[keep[r]];
    }
    Q.act.push_back(std::move(m));
  }
  // U must be a submodule
  for (int k = 0; k < M.A->n; ++k)
    for (const auto& u : U.rows())
      if (!U.contains(fp::apply(M.F(), M.act[k], u)))
        throw std::invalid_argument("quotient_module: not a submodule");
  if (M.graded())
    for (int k : keep) Q.grading.push_back(M.grading[k]);
  if (M.xgraded())
    for (int k : keep) Q.xgrading.push_back(M.xgrading[k]);
  return Q;
}

fp::Subspace generated_submodule(const Module& M, const std::vector<Vec>& vs) {
  fp::Subspace S(M.F(), M.dim);
  std::deque<Vec> todo;
  for (const auto& v : vs)
    if (S.add(v)) todo.push_back(v);
  auto g = M.A->generator_indices();
  while (!todo.empty()) {
    Vec v = todo.front();
    todo.pop_front();
    for (int k : g) {
      Vec w = fp::apply(M.F(), M.act[k], v);
      if (S.add(w)) todo.push_back(w);
    }
  }
  return S;
}

Module shift(const Module& M, int z, const IVec& x) {
  Module N = M;
  if (z) {
    if (N.grading.empty()) N.grading.assign(N.dim, 0);
    for (auto& g : N.grading) g += z;
  }
  if (!x.empty()) {
    if (!N.xgraded()) throw std::invalid_argument("shift: module has no X-grading");
    for (auto& w : N.xgrading) w = deg_add(w, x);
  }
  return N;
}

Module direct_sum(const Module& a, const Module& b) {
  Module M;
  M.A = a.A;
  M.dim = a.dim + b.dim;
  for (int k = 0; k < a.A->n; ++k) {
    Matrix m(M.dim, M.dim);
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j) m(i, j) = a.act[k](i, j);
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j) m(a.dim + i, a.dim + j) = b.act[k](i, j);
    M.act.push_back(std::move(m));
  }
  if (a.graded() || b.graded()) {
    M.grading = a.graded() ? a.grading : std::vector<int>(a.dim, 0);
    auto g = b.graded() ? b.grading : std::vector<int>(b.dim, 0);
    M.grading.insert(M.grading.end(), g.begin(), g.end());
  }
  if (a.xgraded() && b.xgraded()) {
    M.xgrading = a.xgrading;
    M.xgrading.insert(M.xgrading.end(), b.xgrading.begin(), b.xgrading.end());
  }
  return M;
}

Module dual(const Module& M, const AlgebraPtr& Aop) {
  Module D;
  D.A = Aop;
  D.dim = M.dim;
  for (const auto& m : M.act) D.act.push_back(fp::transpose(m));
  for (int g : M.grading) D.grading.push_back(-g);
  for (const auto& w : M.xgrading) {
    IVec v = w;
    for (auto& c : v) c = -c;
    D.xgrading.push_back(v);
  }
  return D;
}

Module dual_involution(const Module& M, const std::vector<Vec>& sigma, bool sigma_negates_x) {
  if (int(sigma.size()) != M.A->n) throw std::invalid_argument("duality requested without involution data");
  Module D;
  D.A = M.A;
  D.dim = M.dim;
  for (int k = 0; k < M.A->n; ++k) D.act.push_back(fp::transpose(M.action(sigma[k])));
  for (int g : M.grading) D.grading.push_back(-g);
  for (const auto& w : M.xgrading) {
    IVec v = w;
    if (!sigma_negates_x)
      for (auto& c : v) c = -c;
    D.xgrading.push_back(v);
  }
  return D;
}

Module truncate_module(const Module& M, const Embedded& eAe) {
  const Algebra& B = *eAe.alg;
  Vec e(M.A->n, 0);
  for (int s = 0; s < B.n; ++s) fp::axpy(M.F(), e, B.one[s], eAe.basis[s]);
  Matrix E = M.action(e);
  std::vector<Vec> cols;
  for (int j = 0; j < M.dim; ++j) cols.push_back(E.col_vec(j));
  fp::Subspace S = fp::span(M.F(), M.dim, cols);
  std::vector<Matrix> mats;
  for (int s = 0; s < B.n; ++s) mats.push_back(M.action(eAe.basis[s]));
  return module_on_subspace(
      eAe.alg, S, [&](int s, const Vec& v) { return fp::apply(M.F(), mats[s], v); }, &M.grading,
      &M.xgrading);
}

Module inflate(const Module& M0, const AlgebraPtr& A, const Embedded& A0, Grades g) {
  fp::Subspace S = fp::span(A->F, A->n, A0.basis);
  Module M;
  M.A = A;
  M.dim = M0.dim;
  for (int k = 0; k < A->n; ++k) {
    if (deg_zero(A->degree(k, g))) {
      Vec c = S.coords(A->unit(k));
      // coords are w.r.t. the echelon rows, which are A0's basis
      M.act.push_back(M0.action(c));
    } else {
      M.act.push_back(Matrix(M.dim, M.dim));
    }
  }
  M.grading = M0.graded() ? M0.grading : std::vector<int>(M0.dim, 0);
  M.xgrading = M0.xgrading;
  return M;
}

Module restrict_module(const Module& M, const Embedded& B) {
  Module R;
  R.A = B.alg;
  R.dim = M.dim;
  for (const auto& b : B.basis) R.act.push_back(M.action(b));
  R.grading = M.grading;
  R.xgrading = M.xgrading;
  return R;
}

std::vector<Matrix> hom_space(const Module& M, const Module& N, Grades g) {
  const Field& F = M.F();
  int dm = M.dim, dn = N.dim;
  // unknown phi(a, b), a in N, b in M
  std::vector<int> var(size_t(dn) * dm, -1);
  int nv = 0;
  for (int a = 0; a < dn; ++a)
    for (int b = 0; b < dm; ++b) {
      if ((g.z || g.x) && N.degree(a, g) != M.degree(b, g)) continue;
      var[size_t(a) * dm + b] = nv++;
    }
  auto gens = M.A->generator_indices();
  std::vector<Vec> eqs;
  for (int k : gens) {
    const Matrix& Mg = M.act[k];
    const Matrix& Ng = N.act[k];
    for (int a = 0; a < dn; ++a)
      for (int b = 0; b < dm; ++b) {
        Vec eq(nv, 0);
        bool any = false;
        // sum_j phi(a,j) Mg(j,b) - sum_i Ng(a,i) phi(i,b)
        for (int j = 0; j < dm; ++j) {
          int v = var[size_t(a) * dm + j];
          if (v >= 0 && Mg(j, b)) {
            eq[v] = F.add(eq[v], Mg(j, b));
            any = true;
          }
        }
        for (int i = 0; i < dn; ++i) {
          int v = var[size_t(i) * dm + b];
          if (v >= 0 && Ng(a, i)) {
            eq[v] = F.sub(eq[v], Ng(a, i));
            any = true;
          }
        }
        if (any) eqs.push_back(std::move(eq));
      }
  }
  Matrix E = Matrix::from_rows(eqs, nv);
  Matrix K = fp::kernel(F, E);
  std::vector<Matrix> out;
  for (int t = 0; t < K.rows; ++t) {
    Matrix phi(dn, dm);
    for (int a = 0; a < dn; ++a)
      for (int b = 0; b < dm; ++b) {
        int v = var[size_t(a) * dm + b];
        if (v >= 0) phi(a, b) = K(t, v);
      }
    out.push_back(std::move(phi));
  }
  return out;
}

bool is_isomorphic(const Module& M, const Module& N) {
  if (M.dim != N.dim) return false;
  if (M.dim == 0) return true;
  auto H = hom_space(M, N);
  if (H.empty()) return false;
  std::mt19937 rng(12345);
  const Field& F = M.F();
  for (int trial = 0; trial < 30; ++trial) {
    Matrix phi(N.dim, M.dim);
    for (const auto& h : H) fp::axpy(F, phi, u32(rng() % F.p), h);
    if (fp::rank(F, phi) == M.dim) return true;
  }
  return false;
}

fp::Subspace module_radical(const Module& M, const std::vector<Vec>& rad_basis) {
  fp::Subspace S(M.F(), M.dim);
  for (const auto& r : rad_basis) {
    Matrix R = M.action(r);
    for (int j = 0; j < M.dim; ++j) S.add(R.col_vec(j));
  }
  return S;
}

fp::Subspace module_socle(const Module& M, const std::vector<Vec>& rad_basis) {
  std::vector<Vec> rows;
  for (const auto& r : rad_basis) {
    Matrix R = M.action(r);
    for (int i = 0; i < M.dim; ++i) rows.push_back(R.row_vec(i));
  }
  Matrix K = fp::kernel(M.F(), Matrix::from_rows(rows, M.dim));
  fp::Subspace S(M.F(), M.dim);
  for (int t = 0; t < K.rows; ++t) S.add(K.row_vec(t));
  return S;
}

}  // namespace kzl
