#include "kzl/structure.hpp"

#include <algorithm>
#include <random>

namespace kzl {

namespace {

using Mat64 = std::vector<u64>;

Mat64 mulmod(const Mat64& X, const Mat64& Y, int n, u64 m) {
  Mat64 Z(size_t(n) * n, 0);
  bool lazy = (m - 1) * (m - 1) <= UINT64_MAX / u64(n);
  for (int i = 0; i < n; ++i) {
    u64* z = Z.data() + size_t(i) * n;
    for (int k = 0; k < n; ++k) {
      u64 x = X[size_t(i) * n + k];
      if (!x) continue;
      const u64* y = Y.data() + size_t(k) * n;
      if (lazy)
        for (int j = 0; j < n; ++j) z[j] += x * y[j];
      else
        for (int j = 0; j < n; ++j) z[j] = (z[j] + x * y[j]) % m;
    }
    if (lazy)
      for (int j = 0; j < n; ++j) z[j] %= m;
  }
  return Z;
}

Mat64 powmod(Mat64 X, int n, u64 m, u64 e) {
  Mat64 R(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) R[size_t(i) * n + i] = 1 % m;
  while (e) {
    if (e & 1) R = mulmod(R, X, n, m);
    e >>= 1;
    if (e) X = mulmod(X, X, n, m);
  }
  return R;
}

// Tr(L^{p^i}) / p^i mod p for the integer lift L of left multiplication by x
u32 trace_form(const Algebra& A, const Vec& x, int i) {
  const u64 p = A.F.p;
  u64 pi = 1;
  for (int t = 0; t < i; ++t) pi *= p;
  u64 m = pi * p;
  Matrix L = A.left(x);
  int n = A.n;
  Mat64 X(L.a.begin(), L.a.end());
  for (int t = 0; t < i; ++t) X = powmod(X, n, m, p);
  u64 tr = 0;
  for (int k = 0; k < n; ++k) tr = (tr + X[size_t(k) * n + k]) % m;
  if (tr % pi) throw std::logic_error("radical: trace not divisible by p^i");
  return u32(tr / pi);
}

Vec eval_poly(const Algebra& A, const fp::Poly& f, const Vec& x, const Vec& e) {
  Vec r(A.n, 0);
  for (int k = int(f.size()) - 1; k >= 0; --k) {
    r = A.mul(r, x);
    fp::axpy(A.F, r, f[k], e);
  }
  return r;
}

// projector onto the generalized eigenspace of x for the root c, inside
// the corner with unit e; returns an empty vector when c is the only root
Vec root_projector(const Algebra& A, const fp::Poly& m, u32 c, const Vec& x, const Vec& e) {
  const Field& F = A.F;
  fp::Poly lin{F.neg(c), 1};
  fp::Poly f{1};
  fp::Poly rest = m;
  for (;;) {
    auto [q, r] = fp::poly_divmod(F, rest, lin);
    fp::poly_trim(r);
    if (!r.empty()) break;
    rest = q;
    f = fp::poly_mul(F, f, lin);
  }
  fp::poly_trim(rest);
  if (rest.size() <= 1) return {};
  fp::Poly s, t;
  fp::poly_xgcd(F, f, rest, s, t);
  // s f + t rest = 1; t*rest vanishes off the c-part
  return eval_poly(A, fp::poly_mul(F, t, rest), x, e);
}

std::vector<u32> roots(const Field& F, const fp::Poly& m) {
  std::vector<u32> r;
  for (u32 c = 0; c < F.p; ++c)
    if (fp::poly_eval(F, m, c) == 0) r.push_back(c);
  return r;
}

int corner_dim(const Algebra& A, const Vec& e, const std::vector<Vec>& span_of) {
  fp::Subspace S(A.F, A.n);
  for (const auto& b : span_of) S.add(A.mul(A.mul(e, b), e));
  return S.dim();
}

std::vector<Vec> unit_vectors(int n) {
  std::vector<Vec> v;
  for (int i = 0; i < n; ++i) {
    Vec u(n, 0);
    u[i] = 1;
    v.push_back(u);
  }
  return v;
}

}  // namespace

fp::Subspace radical(const Algebra& A, fp::Exec ex) {
  const Field& F = A.F;
  int n = A.n;
  int l = 0;
  for (u64 pw = F.p; pw <= u64(n); pw *= F.p) ++l;
  fp::Subspace I = fp::span(F, n, unit_vectors(n));
  for (int i = 0; i <= l && I.dim() > 0; ++i) {
    const auto& C = I.rows();
    int d = I.dim();
    std::vector<u32> g(d);
#pragma omp parallel for schedule(dynamic) if (ex == fp::Exec::parallel && d > 4)
    for (int s = 0; s < d; ++s) g[s] = trace_form(A, C[s], i);
    // unknown a = sum x_s c_s;  g_i(a b_k) = 0 for all k
    Matrix E(n, d);
    for (int s = 0; s < d; ++s) {
      Matrix Ls = A.left(C[s]);  // column k = c_s b_k
      for (int k = 0; k < n; ++k) {
        Vec c = I.coords(Ls.col_vec(k));
        u64 acc = 0;
        for (int t = 0; t < d; ++t) acc = (acc + u64(c[t]) * g[t]) % F.p;
        E(k, s) = u32(acc);
      }
    }
    Matrix K = fp::kernel(F, E, ex);
    fp::Subspace next(F, n);
    for (int r = 0; r < K.rows; ++r) {
      Vec a(n, 0);
      for (int s = 0; s < d; ++s)
        if (K(r, s)) fp::axpy(F, a, K(r, s), C[s]);
      next.add(a);
    }
    I = std::move(next);
  }
  return I;
}

fp::Subspace ideal_product(const Algebra& A, const fp::Subspace& I, const fp::Subspace& K) {
  fp::Subspace S(A.F, A.n);
  for (const auto& y : K.rows()) {
    Matrix R = A.right(y);
    for (const auto& x : I.rows()) S.add(fp::apply(A.F, R, x));
  }
  return S;
}

std::vector<fp::Subspace> radical_series(const Algebra& A, const fp::Subspace& J) {
  std::vector<fp::Subspace> out;
  out.push_back(fp::span(A.F, A.n, unit_vectors(A.n)));
  fp::Subspace cur = J;
  while (cur.dim() > 0) {
    out.push_back(cur);
    fp::Subspace nxt = ideal_product(A, cur, J);
    if (nxt.dim() == cur.dim()) throw std::logic_error("radical_series: radical is not nilpotent");
    cur = std::move(nxt);
  }
  out.push_back(cur);
  return out;
}

std::vector<fp::Subspace> radical_series(const Algebra& A) { return radical_series(A, radical(A)); }

fp::Subspace center(const Algebra& A) {
  std::vector<Vec> rows;
  for (int g : A.generator_indices()) {
    Vec b = A.unit(g);
    Matrix D = fp::add(A.F, A.right(b), fp::scale(A.F, A.left(b), A.F.neg(1)));
    for (int r = 0; r < A.n; ++r) rows.push_back(D.row_vec(r));
  }
  Matrix K = fp::kernel(A.F, Matrix::from_rows(rows, A.n));
  fp::Subspace Z(A.F, A.n);
  for (int r = 0; r < K.rows; ++r) Z.add(K.row_vec(r));
  return Z;
}

fp::Poly minimal_polynomial(const Algebra& A, const Vec& x, const Vec& e) {
  std::vector<Vec> pw{e};
  for (int k = 1; k <= A.n + 1; ++k) {
    pw.push_back(A.mul(x, pw.back()));
    Matrix M = Matrix::from_cols(pw, A.n);
    Matrix K = fp::kernel(A.F, M, fp::Exec::serial);
    if (K.rows > 0) {
      Vec v = K.row_vec(0);
      u32 iv = A.F.inv(v[k]);
      fp::Poly m(k + 1);
      for (int j = 0; j <= k; ++j) m[j] = A.F.mul(v[j], iv);
      return m;
    }
  }
  throw std::logic_error("minimal_polynomial: no relation found");
}

std::vector<Vec> central_idempotents(const Algebra& A) {
  fp::Subspace Z = center(A);
  std::vector<Vec> done, todo{A.one};
  while (!todo.empty()) {
    Vec e = todo.back();
    todo.pop_back();
    bool split = false;
    for (const auto& z : Z.rows()) {
      Vec x = A.mul(e, z);
      fp::Poly m = minimal_polynomial(A, x, e);
      auto rs = roots(A.F, m);
      if (rs.empty()) throw NonSplitError("center is not split over F_" + std::to_string(A.F.p) +
                                          "; use a larger field");
      Vec E = root_projector(A, m, rs[0], x, e);
      if (E.empty()) {
        // single root; a non-linear factor would mean a non-split center
        fp::Poly lin{A.F.neg(rs[0]), 1}, rest = m;
        for (;;) {
          auto [q, r] = fp::poly_divmod(A.F, rest, lin);
          fp::poly_trim(r);
          if (!r.empty()) break;
          rest = q;
        }
        fp::poly_trim(rest);
        if (rest.size() > 1)
          throw NonSplitError("center is not split over F_" + std::to_string(A.F.p) +
                              "; use a larger field");
        continue;
      }
      todo.push_back(E);
      todo.push_back(A.sub(e, E));
      split = true;
      break;
    }
    if (!split) done.push_back(e);
  }
  std::sort(done.begin(), done.end(), [](const Vec& a, const Vec& b) {
    auto fa = std::find_if(a.begin(), a.end(), [](u32 v) { return v != 0; }) - a.begin();
    auto fb = std::find_if(b.begin(), b.end(), [](u32 v) { return v != 0; }) - b.begin();
    return fa != fb ? fa < fb : a < b;
  });
  return done;
}

std::vector<Vec> primitive_idempotents(const Algebra& A, Grades g) {
  Embedded A0;
  if (g.z || g.x) {
    A0 = grade_zero(A, g);
  } else {
    A0.alg = std::make_shared<const Algebra>(A);
    A0.basis = unit_vectors(A.n);
  }
  const Algebra& B = *A0.alg;
  const Field& F = B.F;
  fp::Subspace J0 = radical(B);
  QuotientMap Q = quotient(B, J0);
  const Algebra& S = *Q.alg;

  std::mt19937 rng(20240607u);
  std::vector<Vec> prims, todo{S.one};
  auto Sbasis = unit_vectors(S.n);
  while (!todo.empty()) {
    Vec eps = todo.back();
    todo.pop_back();
    if (corner_dim(S, eps, Sbasis) == 1) {
      prims.push_back(eps);
      continue;
    }
    bool split = false;
    for (int t = 0; t < 200 && !split; ++t) {
      Vec r(S.n);
      for (auto& c : r) c = u32(rng() % F.p);
      Vec z = S.mul(S.mul(eps, r), eps);
      fp::Poly m = minimal_polynomial(S, z, eps);
      for (u32 c : roots(F, m)) {
        Vec E = root_projector(S, m, c, z, eps);
        if (E.empty()) continue;
        todo.push_back(E);
        todo.push_back(S.sub(eps, E));
        split = true;
        break;
      }
    }
    if (!split)
      throw NonSplitError("a simple module is not split over F_" + std::to_string(F.p) +
                          "; use a larger field");
  }

  // lift to B along the nilpotent ideal J0
  auto lift = [&](const Vec& s) {
    Vec v(B.n, 0);
    for (size_t i = 0; i < Q.keep.size(); ++i) v[Q.keep[i]] = s[i];
    return v;
  };
  std::vector<Vec> lifted;
  Vec f(B.n, 0);
  for (size_t k = 0; k < prims.size(); ++k) {
    Vec y;
    if (k + 1 == prims.size()) {
      y = B.sub(B.one, f);
    } else {
      Vec c = B.sub(B.one, f);
      y = B.mul(B.mul(c, lift(prims[k])), c);
      for (int it = 0; it < 64 && B.mul(y, y) != y; ++it) {
        Vec y2 = B.mul(y, y), y3 = B.mul(y2, y);
        y = B.sub(B.scale(y2, F.from_int(3)), B.scale(y3, F.from_int(2)));
      }
    }
    if (B.mul(y, y) != y) throw std::logic_error("idempotent lifting did not converge");
    lifted.push_back(y);
    f = B.add(f, y);
  }
  std::vector<Vec> out;
  for (const auto& y : lifted) {
    Vec v(A.n, 0);
    for (int s = 0; s < B.n; ++s)
      if (y[s]) fp::axpy(A.F, v, y[s], A0.basis[s]);
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> cartan_matrix(const Algebra& A, const std::vector<Vec>& es) {
  size_t k = es.size();
  std::vector<std::vector<int>> c(k, std::vector<int>(k));
  for (size_t i = 0; i < k; ++i) {
    Matrix Li = A.left(es[i]);
    for (size_t j = 0; j < k; ++j) {
      Matrix Rj = A.right(es[j]);
      Matrix P = fp::multiply(A.F, Li, Rj);
      c[i][j] = fp::rank(A.F, P);
    }
  }
  return c;
}

BasicData blocks_and_basic(const Algebra& A, Grades g) {
  BasicData D;
  D.J = radical(A);
  D.idempotents = primitive_idempotents(A, g);
  const auto& es = D.idempotents;
  auto all = unit_vectors(A.n);
  for (const auto& e : es) {
    int d1 = corner_dim(A, e, all);
    int d2 = corner_dim(A, e, D.J.rows());
    if (d1 - d2 != 1)
      throw NonSplitError("a simple module has endomorphism ring of dimension " +
                          std::to_string(d1 - d2) + " over F_" + std::to_string(A.F.p) +
                          "; use a larger field");
  }
  D.cls.assign(es.size(), -1);
  for (size_t i = 0; i < es.size(); ++i) {
    Matrix Li = A.left(es[i]);
    for (size_t c = 0; c < D.reps.size() && D.cls[i] < 0; ++c) {
      const Vec& r = es[D.reps[c]];
      Matrix Rr = A.right(r);
      Matrix P = fp::multiply(A.F, Li, Rr);
      for (int j = 0; j < P.cols; ++j)
        if (!D.J.contains(P.col_vec(j))) {
          D.cls[i] = int(c);
          break;
        }
    }
    if (D.cls[i] < 0) {
      D.cls[i] = int(D.reps.size());
      D.reps.push_back(int(i));
    }
  }
  D.multiplicity.assign(D.reps.size(), 0);
  for (int c : D.cls) D.multiplicity[c]++;

  D.central = central_idempotents(A);
  D.block_of.assign(D.reps.size(), -1);
  for (size_t c = 0; c < D.reps.size(); ++c)
    for (size_t b = 0; b < D.central.size(); ++b)
      if (!fp::is_zero(A.mul(D.central[b], es[D.reps[c]]))) {
        D.block_of[c] = int(b);
        break;
      }

  Vec e(A.n, 0);
  for (int r : D.reps) e = A.add(e, es[r]);
  D.basic = corner(A, e);
  fp::Subspace Bs = fp::span(A.F, A.n, D.basic.basis);
  for (int r : D.reps) D.basic_idempotents.push_back(Bs.coords(es[r]));

  const Algebra& B = *D.basic.alg;
  fp::Subspace JB = radical(B);
  fp::Subspace JB2 = ideal_product(B, JB, JB);
  size_t k = D.reps.size();
  D.quiver.assign(k, std::vector<int>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      const Vec& ei = D.basic_idempotents[i];
      const Vec& ej = D.basic_idempotents[j];
      fp::Subspace S1(B.F, B.n), S2(B.F, B.n);
      for (const auto& x : JB.rows()) S1.add(B.mul(B.mul(ej, x), ei));
      for (const auto& x : JB2.rows()) S2.add(B.mul(B.mul(ej, x), ei));
      D.quiver[i][j] = S1.dim() - S2.dim();
    }
  return D;
}

std::vector<Vec> idempotent_representatives(const Algebra& A, Grades g) {
  fp::Subspace J = radical(A);
  auto es = primitive_idempotents(A, g);
  std::vector<Vec> reps;
  for (const auto& e : es) {
    Matrix Le = A.left(e);
    bool found = false;
    for (const auto& r : reps) {
      Matrix P = fp::multiply(A.F, Le, A.right(r));
      for (int j = 0; j < P.cols && !found; ++j)
        if (!J.contains(P.col_vec(j))) found = true;
      if (found) break;
    }
    if (!found) reps.push_back(e);
  }
  return reps;
}

RadicalGraded radical_graded(const Algebra& A, const std::vector<Vec>& grade0) {
  return associated_graded(A, radical_series(A), grade0);
}

RadicalGraded associated_graded(const Algebra& A, const std::vector<fp::Subspace>& series,
                                const std::vector<Vec>& grade0) {
  int L = int(series.size()) - 1;  // series[L] = 0
  if (L < 0 || series[L].dim() != 0 || series[0].dim() != A.n)
    throw std::invalid_argument("associated_graded: filtration must run from A to 0");
  std::vector<Vec> basis;
  std::vector<int> deg;
  for (int d = 0; d < L; ++d) {
    fp::Subspace T = series[d + 1];
    if (d == 0)
      for (const auto& v : grade0)
        if (T.add(v)) {
          basis.push_back(v);
          deg.push_back(0);
        }
    for (const auto& r : series[d].rows())
      if (T.add(r)) {
        basis.push_back(r);
        deg.push_back(d);
      }
  }
  int n = A.n;
  if (int(basis.size()) != n) throw std::logic_error("radical_graded: adapted basis incomplete");
  Matrix T = Matrix::from_cols(basis, n);
  auto Tinv = fp::inverse(A.F, T);
  if (!Tinv) throw std::logic_error("radical_graded: adapted basis singular");
  auto coords = [&](const Vec& v) { return fp::apply(A.F, *Tinv, v); };

  Algebra G;
  G.F = A.F;
  G.n = n;
  G.sc.resize(size_t(n) * n);
  for (int a = 0; a < n; ++a) G.labels.push_back("g" + std::to_string(deg[a]) + "_" + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int d = deg[a] + deg[b];
      if (d >= L) continue;
      Vec c = coords(A.mul(basis[a], basis[b]));
      for (int t = 0; t < n; ++t)
        if (c[t] && deg[t] == d) G.sc[size_t(a) * n + b].push_back({t, c[t]});
    }
  Vec c1 = coords(A.one);
  G.one.assign(n, 0);
  for (int t = 0; t < n; ++t)
    if (deg[t] == 0) G.one[t] = c1[t];
  G.grading = deg;
  if (A.xgraded()) {
    bool ok = true;
    for (int t = 0; t < n && ok; ++t) {
      int first = -1;
      for (int k = 0; k < n; ++k)
        if (basis[t][k]) {
          if (first < 0)
            first = k;
          else if (A.xgrading[k] != A.xgrading[first])
            ok = false;
        }
      G.xgrading.push_back(A.xgrading[first]);
    }
    if (!ok) G.xgrading.clear();
  }
  for (int t = 0; t < n; ++t)
    if (deg[t] <= 1) G.gens.push_back(t);
  RadicalGraded R;
  R.alg = std::make_shared<const Algebra>(std::move(G));
  R.adapted = std::move(basis);
  R.loewy_length = L;
  return R;
}

QuotientMap quotient_by_idempotent(const Algebra& A, const Vec& e) {
  return quotient(A, ideal_generated(A, {e}));
}

}  // namespace kzl
