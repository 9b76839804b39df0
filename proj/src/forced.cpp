#include "kzl/forced.hpp"

#include <climits>
#include <map>
#include <stdexcept>

namespace kzl {

namespace {

// dense accumulator with a touched list
struct Acc {
  q::QVec v;
  std::vector<int> touched;
  std::vector<char> mark;
  explicit Acc(int n) : v(n), mark(n, 0) {}
  void add(int k, const q::Q& c) {
    if (!mark[k]) {
      mark[k] = 1;
      touched.push_back(k);
    }
    v[k] += c;
  }
  void clear() {
    for (int k : touched) {
      v[k] = 0;
      mark[k] = 0;
    }
    touched.clear();
  }
};

q::QSubspace qspan(int n, const std::vector<q::QVec>& vs) {
  q::QSubspace S(n);
  for (const auto& v : vs) S.add(v);
  return S;
}

q::QSubspace product_Q(const LatticeAlgebra& A, const q::QSubspace& I, const q::QSubspace& K) {
  q::QSubspace S(A.n);
  for (const auto& x : I.rows())
    for (const auto& y : K.rows()) {
      if (S.dim() == A.n) return S;
      S.add(A.mul(x, y));
    }
  return S;
}

// vectors of V supported on the coordinates in `cols`
std::vector<q::QVec> restrict_to_coords(const q::QSubspace& V, const std::vector<char>& in) {
  int d = V.dim(), n = V.ambient();
  std::vector<int> outside;
  for (int k = 0; k < n; ++k)
    if (!in[k]) outside.push_back(k);
  std::vector<q::QVec> res;
  if (d == 0) return res;
  if (outside.empty()) return V.rows();
  q::QMatrix M(int(outside.size()), d);
  for (size_t r = 0; r < outside.size(); ++r)
    for (int c = 0; c < d; ++c) M(int(r), c) = V.rows()[c][outside[r]];
  q::QMatrix ker = q::kernel(M);
  for (int r = 0; r < ker.rows; ++r) {
    q::QVec v(n);
    for (int c = 0; c < d; ++c) q::axpy(v, ker(r, c), V.rows()[c]);
    res.push_back(v);
  }
  return res;
}

}  // namespace

q::QVec LatticeAlgebra::mul(const q::QVec& x, const q::QVec& y) const {
  q::QVec z(n);
  for (int i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      q::Q c = x[i] * y[j];
      for (const auto& t : prod(i, j)) z[t.k] += c * t.c;
    }
  }
  return z;
}

q::QMatrix LatticeAlgebra::left_basis(int i) const {
  q::QMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (const auto& t : prod(i, j)) m(t.k, j) += t.c;
  return m;
}

void LatticeAlgebra::check() const {
  if (!fp::is_prime(p)) throw std::invalid_argument("lattice algebra: p is not prime");
  if (int(sc.size()) != n * n || int(one.size()) != n)
    throw std::invalid_argument("lattice algebra: size mismatch");
  for (const auto& pr : sc)
    for (const auto& t : pr)
      if (!q::is_plocal(t.c, p))
        throw std::invalid_argument("lattice algebra: structure constant not p-local");
  for (const auto& c : one)
    if (!q::is_plocal(c, p)) throw std::invalid_argument("lattice algebra: identity not p-local");
  Acc L(n), R(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        for (const auto& t : prod(i, j))
          for (const auto& u : prod(t.k, k)) L.add(u.k, t.c * u.c);
        for (const auto& t : prod(j, k))
          for (const auto& u : prod(i, t.k)) R.add(u.k, t.c * u.c);
        bool ok = true;
        for (int s : L.touched) ok = ok && L.v[s] == R.v[s];
        for (int s : R.touched) ok = ok && L.v[s] == R.v[s];
        L.clear();
        R.clear();
        if (!ok)
          throw std::invalid_argument("lattice algebra: not associative at (" + std::to_string(i) +
                                      "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
  for (int i = 0; i < n; ++i) {
    q::QVec b(n);
    b[i] = 1;
    if (mul(one, b) != b || mul(b, one) != b)
      throw std::invalid_argument("lattice algebra: identity is not a unit");
  }
  if (xgraded()) {
    if (int(xgrading.size()) != n) throw std::invalid_argument("lattice algebra: x-grading size");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (const auto& t : prod(i, j))
          if (xgrading[t.k] != deg_add(xgrading[i], xgrading[j]))
            throw std::invalid_argument("lattice algebra: X-grading not multiplicative");
  }
}

Algebra LatticeAlgebra::reduce() const {
  Field F(p);
  Algebra A;
  A.F = F;
  A.n = n;
  A.labels = labels;
  if (A.labels.empty())
    for (int i = 0; i < n; ++i) A.labels.push_back("b" + std::to_string(i));
  A.sc.resize(sc.size());
  for (size_t s = 0; s < sc.size(); ++s)
    for (const auto& t : sc[s]) {
      u32 c = q::reduce_mod(t.c, F);
      if (c) A.sc[s].push_back({t.k, c});
    }
  A.one.resize(n);
  for (int i = 0; i < n; ++i) A.one[i] = q::reduce_mod(one[i], F);
  A.xgrading = xgrading;
  return A;
}

LatticeAlgebra make_lattice(unsigned p, int n, const std::vector<std::string>& labels,
                            const std::function<q::QVec(int, int)>& prod) {
  LatticeAlgebra A;
  A.p = p;
  A.n = n;
  A.labels = labels;
  A.sc.resize(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      q::QVec v = prod(i, j);
      for (int k = 0; k < n; ++k)
        if (sgn(v[k]) != 0) A.sc[size_t(i) * n + j].push_back({k, v[k]});
    }
  A.one.assign(n, 0);
  return A;
}

LatticeAlgebra lattice_integers(unsigned p) {
  auto A = make_lattice(p, 1, {"1"}, [](int, int) { return q::QVec{1}; });
  A.one = {1};
  A.check();
  return A;
}

LatticeAlgebra lattice_quadratic(unsigned p, long long c, const IVec& xweight) {
  auto A = make_lattice(p, 2, {"1", "x"}, [&](int i, int j) {
    q::QVec v(2);
    if (i + j < 2)
      v[i + j] = 1;
    else
      v[1] = q::Q(long(c));
    return v;
  });
  A.one = {1, 0};
  if (!xweight.empty()) A.xgrading = {IVec(xweight.size(), 0), xweight};
  A.check();
  return A;
}

LatticeAlgebra lattice_path_a2(unsigned p) {
  // b0 = e1, b1 = e2, b2 = a
  auto A = make_lattice(p, 3, {"e1", "e2", "a"}, [](int i, int j) {
    q::QVec v(3);
    if (i == j && i < 2) v[i] = 1;
    if ((i == 1 && j == 2) || (i == 2 && j == 0)) v[2] = 1;
    return v;
  });
  A.one = {1, 1, 0};
  A.check();
  return A;
}

void LatticeModule::check() const {
  if (!A) throw std::invalid_argument("lattice module: no algebra");
  if (int(act.size()) != A->n) throw std::invalid_argument("lattice module: action size");
  for (const auto& m : act) {
    if (m.rows != dim || m.cols != dim) throw std::invalid_argument("lattice module: matrix shape");
    for (const auto& c : m.a)
      if (!q::is_plocal(c, A->p)) throw std::invalid_argument("lattice module: action leaves lattice");
  }
  auto mm = [&](const q::QMatrix& x, const q::QMatrix& y) {
    q::QMatrix z(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int k = 0; k < dim; ++k) {
        if (sgn(x(i, k)) == 0) continue;
        for (int j = 0; j < dim; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  };
  for (int i = 0; i < A->n; ++i)
    for (int j = 0; j < A->n; ++j) {
      q::QMatrix lhs = mm(act[i], act[j]);
      q::QMatrix rhs(dim, dim);
      for (const auto& t : A->prod(i, j))
        for (size_t s = 0; s < rhs.a.size(); ++s) rhs.a[s] += t.c * act[t.k].a[s];
      if (lhs.a != rhs.a) throw std::invalid_argument("lattice module: action is not multiplicative");
    }
}

Module LatticeModule::reduce(const AlgebraPtr& Ak) const {
  Module M;
  M.A = Ak;
  M.dim = dim;
  for (const auto& m : act) {
    Matrix r(dim, dim);
    for (size_t s = 0; s < m.a.size(); ++s) r.a[s] = q::reduce_mod(m.a[s], Ak->F);
    M.act.push_back(std::move(r));
  }
  return M;
}

q::QSubspace radical_Q(const LatticeAlgebra& A) {
  int n = A.n;
  std::vector<q::Q> tr(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (const auto& t : A.prod(k, j))
        if (t.k == j) tr[k] += t.c;
  q::QMatrix T(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& t : A.prod(i, j)) T(i, j) += t.c * tr[t.k];
  q::QMatrix K = q::kernel(T);
  std::vector<q::QVec> rows;
  for (int r = 0; r < K.rows; ++r) rows.emplace_back(K.a.begin() + long(r) * n, K.a.begin() + long(r + 1) * n);
  return qspan(n, rows);
}

std::vector<q::QSubspace> radical_series_Q(const LatticeAlgebra& A) {
  std::vector<q::QVec> all;
  for (int i = 0; i < A.n; ++i) {
    q::QVec b(A.n);
    b[i] = 1;
    all.push_back(b);
  }
  std::vector<q::QSubspace> s{qspan(A.n, all)};
  q::QSubspace J = radical_Q(A);
  if (J.dim() == A.n && A.n > 0) throw std::logic_error("radical_Q: whole algebra");
  s.push_back(J);
  while (s.back().dim() > 0) {
    q::QSubspace next = product_Q(A, s.back(), J);
    if (next.dim() >= s.back().dim()) throw std::logic_error("radical_series_Q: not nilpotent");
    s.push_back(next);
  }
  return s;
}

fp::Subspace saturate_mod_p(const std::vector<q::QVec>& V, int ambient, unsigned p, const Field& F) {
  std::vector<q::QVec> rows;
  const int n = ambient;
  const q::Q P(p);
  auto primitive = [&](q::QVec& r) {
    int v = INT_MAX;
    for (const auto& c : r) v = std::min(v, q::valuation(c, p));
    if (v == INT_MAX) throw std::invalid_argument("saturate: zero vector");
    q::Q s = 1;
    for (int i = 0; i < (v > 0 ? v : -v); ++i) s *= P;
    for (auto& c : r) c = v > 0 ? q::Q(c / s) : q::Q(c * s);
  };
  for (const auto& v : V) {
    rows.push_back(v);
    if (int(v.size()) != n) throw std::invalid_argument("saturate: ambient mismatch");
    primitive(rows.back());
  }
  int k = int(rows.size());
  for (;;) {
    Matrix M(n, k);
    for (int c = 0; c < k; ++c)
      for (int r = 0; r < n; ++r) M(r, c) = q::reduce_mod(rows[c][r], F);
    Matrix ker = fp::kernel(F, M);
    if (ker.rows == 0) break;
    Vec c = ker.row_vec(0);
    int j = 0;
    while (c[j] == 0) ++j;
    q::QVec w(n);
    for (int i = 0; i < k; ++i)
      if (c[i]) q::axpy(w, q::Q(c[i]), rows[i]);
    for (auto& x : w) x /= P;
    primitive(w);
    rows[j] = std::move(w);
  }
  fp::Subspace W(F, n);
  for (const auto& r : rows) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = q::reduce_mod(r[i], F);
    W.add(v);
  }
  if (W.dim() != k) throw std::logic_error("saturate: rank dropped");
  return W;
}

ForcedGraded forced_grading(const LatticeAlgebra& A) {
  ForcedGraded G;
  Algebra Ak = A.reduce();
  G.reduction = std::make_shared<const Algebra>(Ak);
  G.rad_Q = radical_series_Q(A);
  for (const auto& S : G.rad_Q) G.filt.push_back(saturate_mod_p(S.rows(), A.n, A.p, Ak.F));
  G.graded = associated_graded(Ak, G.filt);
  for (size_t d = 0; d + 1 < G.filt.size(); ++d) G.dims.push_back(G.filt[d].dim() - G.filt[d + 1].dim());
  return G;
}

bool check_multiplicativity(const ForcedGraded& G) {
  const Algebra& A = *G.reduction;
  int L = int(G.filt.size()) - 1;
  for (int a = 0; a <= L; ++a)
    for (int b = 0; a + b <= L; ++b)
      for (const auto& x : G.filt[a].rows())
        for (const auto& y : G.filt[b].rows())
          if (!G.filt[std::min(a + b, L)].contains(A.mul(x, y))) return false;
  return true;
}

Module forced_grading_module(const ForcedGraded& G, const LatticeModule& LM) {
  LM.check();
  const Algebra& Ak = *G.reduction;
  const Field& F = Ak.F;
  Module M = LM.reduce(G.reduction);
  int L = int(G.filt.size()) - 1;
  std::vector<fp::Subspace> FM;
  for (int d = 0; d <= L; ++d) {
    fp::Subspace S(F, M.dim);
    for (const auto& a : G.filt[d].rows()) {
      Matrix act = M.action(a);
      for (int c = 0; c < M.dim; ++c) S.add(act.col_vec(c));
    }
    FM.push_back(S);
  }
  std::vector<Vec> basis;
  std::vector<int> deg;
  for (int d = 0; d < L; ++d) {
    fp::Subspace T = FM[d + 1];
    for (const auto& r : FM[d].rows())
      if (T.add(r)) {
        basis.push_back(r);
        deg.push_back(d);
      }
  }
  if (int(basis.size()) != M.dim) throw std::logic_error("forced module grading incomplete");
  auto Tinv = fp::inverse(F, Matrix::from_cols(basis, M.dim));
  const Algebra& Gr = *G.graded.alg;
  Module R;
  R.A = G.graded.alg;
  R.dim = M.dim;
  R.grading = deg;
  for (int a = 0; a < Gr.n; ++a) {
    Matrix m(M.dim, M.dim);
    int da = Gr.grading[a];
    Matrix act = M.action(G.graded.adapted[a]);
    for (int c = 0; c < M.dim; ++c) {
      int d = deg[c] + da;
      if (d >= L) continue;
      Vec w = fp::apply(F, *Tinv, fp::apply(F, act, basis[c]));
      for (int r = 0; r < M.dim; ++r)
        if (deg[r] == d) m(r, c) = w[r];
    }
    R.act.push_back(std::move(m));
  }
  R.check();
  return R;
}

XCompatibility x_compatibility_check(const LatticeAlgebra& A) {
  XCompatibility res;
  if (!A.xgraded()) {
    res.reason = "no X-grading supplied; single weight space";
    return res;
  }
  Field F(A.p);
  std::map<IVec, std::vector<char>> spaces;
  for (int k = 0; k < A.n; ++k) {
    auto& m = spaces[A.xgrading[k]];
    if (m.empty()) m.assign(A.n, 0);
    m[k] = 1;
  }
  auto series = radical_series_Q(A);
  for (int d = 0; d < int(series.size()); ++d) {
    const auto& V = series[d];
    fp::Subspace Wn = saturate_mod_p(V.rows(), A.n, A.p, F);
    int qsum = 0, lsum = 0;
    fp::Subspace sum(F, A.n);
    IVec qbad;
    for (const auto& [w, in] : spaces) {
      auto piece = restrict_to_coords(V, in);
      qsum += int(piece.size());
      // projection onto the weight space bigger than the intersection
      if (qbad.empty() && V.dim() > 0) {
        q::QMatrix P(V.dim(), A.n);
        for (int r = 0; r < V.dim(); ++r)
          for (int k = 0; k < A.n; ++k)
            if (in[k]) P(r, k) = V.rows()[r][k];
        if (q::rank(P) > int(piece.size())) qbad = w;
      }
      if (piece.empty()) continue;
      fp::Subspace Wt = saturate_mod_p(piece, A.n, A.p, F);
      lsum += Wt.dim();
      for (const auto& r : Wt.rows())
        sum.add(r);
    }
    bool qok = qsum == V.dim();
    bool lok = lsum == Wn.dim() && sum.dim() == Wn.dim();
    if (qok && !lok) throw std::logic_error("x_compatibility: homogeneous radical but lattice split fails");
    if (!qok) {
      res.holds = false;
      res.grade = d;
      res.weight = qbad;
      res.reason = "rad^n(A_Q) is not spanned by weight vectors";
      return res;
    }
  }
  return res;
}

GradingComparison compare_with_radical_grading(const LatticeAlgebra& A) {
  GradingComparison c;
  c.forced = forced_grading(A).dims;
  Algebra Ak = A.reduce();
  auto s = radical_series(Ak);
  for (size_t d = 0; d + 1 < s.size(); ++d) c.radical.push_back(s[d].dim() - s[d + 1].dim());
  c.agree = c.forced == c.radical;
  return c;
}

}  // namespace kzl
