#include "kzl/resolution.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "kzl/structure.hpp"

namespace kzl {

namespace {

Matrix left_on(const Algebra& A, const fp::Subspace& P, const Vec& a) {
  const auto& rows = P.rows();
  int d = P.dim();
  Matrix m(d, d);
  for (int t = 0; t < d; ++t) {
    Vec c = P.coords(A.mul(a, rows[t]));
    for (int r = 0; r < d; ++r) m(r, t) = c[r];
  }
  return m;
}

Degree vec_degree(const Algebra& A, const Vec& v, Grades g) {
  for (int k = 0; k < A.n; ++k)
    if (v[k]) return A.degree(k, g);
  return {};
}

// a graded vector space with a block action of A (either M or a free term)
struct Ambient {
  int dim = 0;
  std::vector<Degree> deg;
  std::function<Vec(int, const Vec&)> idem;   // e_i v
  std::function<Vec(int, const Vec&)> rad;    // s_r v
  std::function<Vec(int, int, const Vec&)> pb;  // pbasis[i][t] v
};

Ambient module_ambient(const ProjectiveSystem& S, const Module& M) {
  Ambient a;
  a.dim = M.dim;
  for (int k = 0; k < M.dim; ++k) a.deg.push_back(M.degree(k, S.g));
  auto idm = std::make_shared<std::vector<Matrix>>();
  for (const auto& e : S.idem) idm->push_back(M.action(e));
  auto rdm = std::make_shared<std::vector<Matrix>>();
  for (const auto& r : S.radgens) rdm->push_back(M.action(r));
  auto pbm = std::make_shared<std::vector<std::vector<Matrix>>>();
  for (const auto& b : S.pbasis) {
    pbm->emplace_back();
    for (const auto& v : b) pbm->back().push_back(M.action(v));
  }
  const Field F = M.F();
  a.idem = [idm, F](int i, const Vec& v) { return fp::apply(F, (*idm)[i], v); };
  a.rad = [rdm, F](int r, const Vec& v) { return fp::apply(F, (*rdm)[r], v); };
  a.pb = [pbm, F](int i, int t, const Vec& v) { return fp::apply(F, (*pbm)[i][t], v); };
  return a;
}

Ambient term_ambient(const ProjectiveSystem& S, const ResolutionTerm& T) {
  Ambient a;
  a.dim = T.dim;
  for (size_t g = 0; g < T.gens.size(); ++g) {
    int i = T.gens[g].i;
    for (const auto& d : S.pdeg[i]) a.deg.push_back(deg_add(d, T.gens[g].d));
  }
  const Field F = S.A->F;
  auto blockwise = [&S, T, F](auto pick) {
    return [&S, T, F, pick](const Vec& v) {
      Vec out(T.dim, 0);
      for (size_t g = 0; g < T.gens.size(); ++g) {
        int j = T.gens[g].i, o = T.offset[g], d = int(S.pbasis[j].size());
        bool nz = false;
        for (int t = 0; t < d && !nz; ++t) nz = v[o + t] != 0;
        if (!nz) continue;
        const Matrix& m = pick(j);
        for (int r = 0; r < d; ++r) {
          u64 acc = 0;
          for (int t = 0; t < d; ++t) acc += u64(m(r, t)) * v[o + t] % F.p;
          out[o + r] = u32(acc % F.p);
        }
      }
      return out;
    };
  };
  a.idem = [blockwise, &S](int i, const Vec& v) {
    return blockwise([&S, i](int j) -> const Matrix& { return S.lidem[j][i]; })(v);
  };
  a.rad = [blockwise, &S](int r, const Vec& v) {
    return blockwise([&S, r](int j) -> const Matrix& { return S.lrad[j][r]; })(v);
  };
  a.pb = [blockwise, &S](int i, int t, const Vec& v) {
    return blockwise([&S, i, t](int j) -> const Matrix& { return S.lmul[j][i][t]; })(v);
  };
  return a;
}

ResolutionTerm make_term(const ProjectiveSystem& S, std::vector<Generator> gens,
                         std::vector<Vec> omega) {
  ResolutionTerm T;
  T.gens = std::move(gens);
  T.omega = std::move(omega);
  for (const auto& g : T.gens) {
    T.offset.push_back(T.dim);
    T.dim += int(S.pbasis[g.i].size());
  }
  return T;
}

// minimal generators of the submodule Omega (homogeneous basis, grouped by degree)
void choose_generators(const ProjectiveSystem& S, const Ambient& amb, const Field& F,
                       const std::map<Degree, std::vector<Vec>>& omega,
                       std::vector<Generator>& gens, std::vector<Vec>& images) {
  // J * Omega, by degree
  std::map<Degree, fp::Subspace> jo;
  for (const auto& [d, vs] : omega) {
    (void)d;
    for (const auto& w : vs)
      for (size_t r = 0; r < S.radgens.size(); ++r) {
        Vec x = amb.rad(int(r), w);
        if (fp::is_zero(x)) continue;
        Degree dx;
        for (int k = 0; k < amb.dim; ++k)
          if (x[k]) {
            dx = amb.deg[k];
            break;
          }
        auto it = jo.find(dx);
        if (it == jo.end()) it = jo.emplace(dx, fp::Subspace(F, amb.dim)).first;
        it->second.add(x);
      }
  }
  for (const auto& [d, vs] : omega) {
    for (int i = 0; i < S.size(); ++i) {
      fp::Subspace T(F, amb.dim);
      auto it = jo.find(d);
      if (it != jo.end())
        for (const auto& x : it->second.rows()) T.add(amb.idem(i, x));
      for (const auto& w : vs) {
        Vec y = amb.idem(i, w);
        if (T.add(y)) {
          gens.push_back({i, d});
          images.push_back(y);
        }
      }
    }
  }
}

}  // namespace

std::shared_ptr<const ProjectiveSystem> ProjectiveSystem::make(const AlgebraPtr& A, Grades g,
                                                               std::vector<Vec> idem) {
  auto S = std::make_shared<ProjectiveSystem>();
  S->A = A;
  S->g = g;
  if (g.z && !A->graded()) throw std::invalid_argument("projective system: algebra is not graded");
  if (g.x && !A->xgraded()) throw std::invalid_argument("projective system: algebra has no X-grading");
  S->idem = idem.empty() ? idempotent_representatives(*A, g) : std::move(idem);
  const Algebra& B = *A;
  for (const auto& e : S->idem) {
    if (!is_idempotent(B, e)) throw std::invalid_argument("projective system: not an idempotent");
    std::vector<Vec> vs;
    for (int k = 0; k < B.n; ++k) vs.push_back(B.mul(B.unit(k), e));
    fp::Subspace P = fp::span(B.F, B.n, vs);
    S->pspace.push_back(P);
    S->pbasis.push_back(P.rows());
    std::vector<Degree> ds;
    for (const auto& v : P.rows()) ds.push_back(vec_degree(B, v, g));
    S->pdeg.push_back(ds);
  }
  // homogeneous complement of J^2 in J
  fp::Subspace J = radical(B);
  fp::Subspace J2 = ideal_product(B, J, J);
  fp::Subspace T = J2;
  for (const auto& r : J.rows())
    if (T.add(r)) S->radgens.push_back(r);
  int k = S->size();
  S->lmul.resize(k);
  S->lidem.resize(k);
  S->lrad.resize(k);
  for (int j = 0; j < k; ++j) {
    const auto& P = S->pspace[j];
    for (int i = 0; i < k; ++i) {
      S->lidem[j].push_back(left_on(B, P, S->idem[i]));
      S->lmul[j].emplace_back();
      for (const auto& v : S->pbasis[i]) S->lmul[j][i].push_back(left_on(B, P, v));
    }
    for (const auto& r : S->radgens) S->lrad[j].push_back(left_on(B, P, r));
  }
  return S;
}

Resolution minimal_resolution(const SystemPtr& sys, const Module& M, int nmax) {
  if (nmax < 0) throw std::invalid_argument("minimal_resolution: N_max < 0");
  const ProjectiveSystem& S = *sys;
  const Field& F = S.A->F;
  if (S.g.z && !M.graded()) throw std::invalid_argument("minimal_resolution: module is not graded");
  Resolution R;
  R.sys = sys;
  R.M = M;
  // Omega_0 = M
  Ambient amb = module_ambient(S, M);
  std::map<Degree, std::vector<Vec>> omega;
  {
    std::map<Degree, fp::Subspace> by;
    for (int k = 0; k < M.dim; ++k) {
      Vec u(M.dim, 0);
      u[k] = 1;
      auto it = by.find(amb.deg[k]);
      if (it == by.end()) it = by.emplace(amb.deg[k], fp::Subspace(F, M.dim)).first;
      it->second.add(u);
    }
    for (auto& [d, s] : by) omega[d] = s.rows();
  }
  for (int n = 0; n <= nmax; ++n) {
    std::vector<Generator> gens;
    std::vector<Vec> images;
    choose_generators(S, amb, F, omega, gens, images);
    ResolutionTerm T = make_term(S, gens, images);
    R.terms.push_back(T);
    if (T.dim == 0) {
      R.complete = true;
      break;
    }
    // kernel of d: T -> amb, degree by degree
    Ambient next = term_ambient(S, R.terms.back());
    const ResolutionTerm& Tn = R.terms.back();
    std::map<Degree, std::vector<int>> cols, rows;
    for (int c = 0; c < Tn.dim; ++c) cols[next.deg[c]].push_back(c);
    for (int r = 0; r < amb.dim; ++r) rows[amb.deg[r]].push_back(r);
    std::vector<Vec> image_of(Tn.dim);
    for (size_t g = 0; g < Tn.gens.size(); ++g) {
      int i = Tn.gens[g].i;
      for (size_t t = 0; t < S.pbasis[i].size(); ++t)
        image_of[Tn.offset[g] + t] = amb.pb(i, int(t), Tn.omega[g]);
    }
    omega.clear();
    for (const auto& [d, cs] : cols) {
      const auto& rs = rows[d];
      Matrix D(int(rs.size()), int(cs.size()));
      for (size_t c = 0; c < cs.size(); ++c)
        for (size_t r = 0; r < rs.size(); ++r) D(int(r), int(c)) = image_of[cs[c]][rs[r]];
      Matrix K = fp::kernel(F, D);
      for (int k = 0; k < K.rows; ++k) {
        Vec w(Tn.dim, 0);
        for (size_t c = 0; c < cs.size(); ++c) w[cs[c]] = K(k, int(c));
        omega[d].push_back(std::move(w));
      }
    }
    amb = std::move(next);
    if (omega.empty() && n < nmax) {
      R.terms.push_back(make_term(S, {}, {}));
      R.complete = true;
      break;
    }
  }
  return R;
}

bool check_minimality(const Resolution& R) {
  const ProjectiveSystem& S = *R.sys;
  const Field& F = S.A->F;
  for (size_t n = 1; n < R.terms.size(); ++n) {
    const ResolutionTerm& prev = R.terms[n - 1];
    Ambient amb = term_ambient(S, prev);
    fp::Subspace JP(F, prev.dim);
    for (size_t g = 0; g < prev.gens.size(); ++g) {
      int i = prev.gens[g].i;
      for (size_t t = 0; t < S.pbasis[i].size(); ++t) {
        Vec u(prev.dim, 0);
        u[prev.offset[g] + t] = 1;
        for (size_t r = 0; r < S.radgens.size(); ++r) JP.add(amb.rad(int(r), u));
      }
    }
    for (const auto& w : R.terms[n].omega)
      if (!JP.contains(w)) return false;
  }
  return true;
}

bool check_euler(const Resolution& R) {
  if (!R.complete) return true;
  long long s = 0;
  for (size_t n = 0; n < R.terms.size(); ++n) s += (n % 2 ? -1 : 1) * R.terms[n].dim;
  return s == R.M.dim;
}

Module resolution_term_module(const Resolution& R, int n) {
  const ProjectiveSystem& S = *R.sys;
  const Algebra& A = *S.A;
  const ResolutionTerm& T = R.terms.at(n);
  Module P;
  P.A = S.A;
  P.dim = T.dim;
  for (int k = 0; k < A.n; ++k) {
    Matrix m(T.dim, T.dim);
    for (size_t g = 0; g < T.gens.size(); ++g) {
      int j = T.gens[g].i, o = T.offset[g];
      Matrix b = left_on(A, S.pspace[j], A.unit(k));
      for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < b.cols; ++c) m(o + r, o + c) = b(r, c);
    }
    P.act.push_back(std::move(m));
  }
  for (size_t g = 0; g < T.gens.size(); ++g) {
    int j = T.gens[g].i;
    for (size_t t = 0; t < S.pbasis[j].size(); ++t) {
      Degree d = deg_add(S.pdeg[j][t], T.gens[g].d);
      size_t pos = 0;
      if (S.g.z) P.grading.push_back(d[pos++]);
      if (S.g.x) P.xgrading.push_back(IVec(d.begin() + long(pos), d.end()));
    }
  }
  return P;
}

int ExtTable::at(int n, const Degree& s) const {
  auto it = entries.find({n, s});
  return it == entries.end() ? 0 : it->second;
}

int ExtTable::row_sum(int n) const {
  int s = 0;
  for (const auto& [k, v] : entries)
    if (k.first == n) s += v;
  return s;
}

ExtTable ext_table(const Resolution& R, const Module& N, int nmax) {
  const ProjectiveSystem& S = *R.sys;
  const Field& F = S.A->F;
  if (N.A.get() != S.A.get() && !(N.A->n == S.A->n && N.A->sc.size() == S.A->sc.size()))
    throw std::invalid_argument("ext_table: modules over different algebras");
  int avail = int(R.terms.size()) - 1;
  if (!R.complete && avail < nmax + 1)
    throw std::invalid_argument("ext_table: resolution too short");
  int k = S.size();
  // e_i N with homogeneous basis
  std::vector<fp::Subspace> eN;
  std::vector<std::vector<Degree>> eNdeg;
  for (int i = 0; i < k; ++i) {
    Matrix E = N.action(S.idem[i]);
    std::vector<Vec> cs;
    for (int c = 0; c < N.dim; ++c) cs.push_back(E.col_vec(c));
    eN.push_back(fp::span(F, N.dim, cs));
    std::vector<Degree> ds;
    for (size_t r = 0; r < eN[i].rows().size(); ++r) ds.push_back(N.degree(eN[i].pivots()[r], S.g));
    eNdeg.push_back(ds);
  }
  std::vector<std::vector<Matrix>> rhoN(k);
  for (int i = 0; i < k; ++i)
    for (const auto& v : S.pbasis[i]) rhoN[i].push_back(N.action(v));

  auto term = [&](int n) -> const ResolutionTerm* {
    return n < int(R.terms.size()) ? &R.terms[n] : nullptr;
  };
  // shifts that can occur
  std::set<Degree> shifts;
  for (int n = 0; n <= nmax && n < int(R.terms.size()); ++n)
    for (const auto& g : R.terms[n].gens)
      for (const auto& d : eNdeg[g.i]) shifts.insert(deg_sub(g.d, d));

  // cochain basis C^n_s: (generator, row of e_i N)
  auto cochains = [&](int n, const Degree& s) {
    std::vector<std::pair<int, int>> out;
    const ResolutionTerm* T = term(n);
    if (!T) return out;
    for (size_t g = 0; g < T->gens.size(); ++g) {
      Degree want = deg_sub(T->gens[g].d, s);
      int i = T->gens[g].i;
      for (size_t r = 0; r < eNdeg[i].size(); ++r)
        if (eNdeg[i][r] == want) out.push_back({int(g), int(r)});
    }
    return out;
  };
  // d^n : C^n_s -> C^{n+1}_s
  auto drank = [&](int n, const Degree& s) {
    if (n < 0) return 0;
    const ResolutionTerm* T = term(n);
    const ResolutionTerm* U = term(n + 1);
    if (!T || !U) return 0;
    auto src = cochains(n, s), dst = cochains(n + 1, s);
    if (src.empty() || dst.empty()) return 0;
    Matrix D(int(dst.size()), int(src.size()));
    std::map<int, std::vector<int>> dst_by_gen;
    for (size_t q = 0; q < dst.size(); ++q) dst_by_gen[dst[q].first].push_back(int(q));
    for (size_t c = 0; c < src.size(); ++c) {
      int g = src[c].first, i = T->gens[g].i, o = T->offset[g];
      const Vec& u = eN[i].rows()[src[c].second];
      for (const auto& [g2, qs] : dst_by_gen) {
        const Vec& w = U->omega[g2];
        Vec val(N.dim, 0);
        for (size_t t = 0; t < S.pbasis[i].size(); ++t)
          if (w[o + t]) fp::axpy(F, val, w[o + t], fp::apply(F, rhoN[i][t], u));
        if (fp::is_zero(val)) continue;
        int i2 = U->gens[g2].i;
        Vec cc = eN[i2].coords(val);
        for (int q : qs) D(q, int(c)) = cc[dst[q].second];
      }
    }
    return fp::rank(F, D);
  };

  ExtTable E;
  E.degree_bound = nmax;
  for (const auto& s : shifts) {
    std::vector<int> rk(nmax + 2, 0);
    for (int n = 0; n <= nmax; ++n) rk[n] = drank(n, s);
    for (int n = 0; n <= nmax; ++n) {
      int c = int(cochains(n, s).size());
      int v = c - rk[n] - (n > 0 ? rk[n - 1] : 0);
      if (v < 0) throw std::logic_error("ext_table: negative dimension");
      if (v) E.entries[{n, s}] = v;
    }
  }
  return E;
}

ExtTable ext_table(const SystemPtr& sys, const Module& M, const Module& N, int nmax) {
  return ext_table(minimal_resolution(sys, M, nmax + 1), N, nmax);
}

std::vector<int> ext_ungraded_free(const Module& M, const Module& N, int nmax) {
  const Algebra& A = *M.A;
  const Field& F = A.F;
  int n = A.n;
  // current target space (dimension, action of basis elements)
  int tdim = M.dim;
  std::vector<Matrix> tact = M.act;
  // vectors spanning the kernel to be covered
  std::vector<Vec> K;
  for (int k = 0; k < M.dim; ++k) {
    Vec u(M.dim, 0);
    u[k] = 1;
    K.push_back(u);
  }
  std::vector<std::vector<Vec>> omegas;  // per level: images of free generators
  std::mt19937 rng(97);
  for (int lev = 0; lev <= nmax + 1; ++lev) {
    // generators of span(K) as a submodule: random elements of K until they
    // generate everything (near-minimal without using any structure theory)
    std::vector<Vec> gens;
    fp::Subspace cov(F, tdim);
    int kdim = fp::span(F, tdim, K).dim();
    while (cov.dim() < kdim) {
      Vec v(tdim, 0);
      for (const auto& b : K) fp::axpy(F, v, u32(rng() % F.p), b);
      if (cov.contains(v)) continue;
      gens.push_back(v);
      for (int b = 0; b < n; ++b) cov.add(fp::apply(F, tact[b], v));
    }
    omegas.push_back(gens);
    if (gens.empty()) break;
    int g = int(gens.size());
    // free module A^g, basis (j, b): b_b in slot j; map to target
    Matrix D(tdim, g * n);
    for (int j = 0; j < g; ++j)
      for (int b = 0; b < n; ++b) {
        Vec img = fp::apply(F, tact[b], gens[j]);
        for (int r = 0; r < tdim; ++r) D(r, j * n + b) = img[r];
      }
    Matrix Ker = fp::kernel(F, D);
    K.clear();
    for (int r = 0; r < Ker.rows; ++r) K.push_back(Ker.row_vec(r));
    // action of A on A^g: left multiplication in each slot
    tdim = g * n;
    std::vector<Matrix> nact;
    for (int a = 0; a < n; ++a) {
      Matrix L = A.left_basis(a);
      Matrix m(tdim, tdim);
      for (int j = 0; j < g; ++j)
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) m(j * n + r, j * n + c) = L(r, c);
      nact.push_back(std::move(m));
    }
    tact = std::move(nact);
  }
  // Hom(A^g, N) = N^g; (d phi)(j') = sum_{j,b} w_{j'}[j,b] rho_N(b_b) phi(j)
  std::vector<int> ext(nmax + 1, 0);
  auto cdim = [&](int lev) { return lev < int(omegas.size()) ? int(omegas[lev].size()) * N.dim : 0; };
  auto drank = [&](int lev) {
    if (lev + 1 >= int(omegas.size())) return 0;
    int g = int(omegas[lev].size()), g2 = int(omegas[lev + 1].size());
    if (!g || !g2) return 0;
    Matrix D(g2 * N.dim, g * N.dim);
    for (int j2 = 0; j2 < g2; ++j2) {
      const Vec& w = omegas[lev + 1][j2];
      for (int j = 0; j < g; ++j) {
        Matrix X(N.dim, N.dim);
        for (int b = 0; b < n; ++b)
          if (w[j * n + b]) fp::axpy(F, X, w[j * n + b], N.act[b]);
        for (int r = 0; r < N.dim; ++r)
          for (int c = 0; c < N.dim; ++c) D(j2 * N.dim + r, j * N.dim + c) = X(r, c);
      }
    }
    return fp::rank(F, D);
  };
  std::vector<int> rk(nmax + 1);
  for (int l = 0; l <= nmax; ++l) rk[l] = drank(l);
  for (int l = 0; l <= nmax; ++l) ext[l] = cdim(l) - rk[l] - (l ? rk[l - 1] : 0);
  return ext;
}

}  // namespace kzl
