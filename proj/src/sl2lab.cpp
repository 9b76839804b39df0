#include "kzl/sl2lab.hpp"

#include <algorithm>
#include <stdexcept>

#include "kzl/alcove.hpp"
#include "kzl/instances.hpp"

namespace kzl::sl2 {

namespace {

using IVecLL = std::vector<long long>;

int mod(long long a, int p) { return int(((a % p) + p) % p); }

long long symrep(int k, int p) { return k <= (p - 1) / 2 ? k : k - p; }

Matrix power(const Field& F, const Matrix& m, int e) {
  Matrix r = Matrix::identity(m.rows);
  for (int i = 0; i < e; ++i) r = fp::multiply(F, r, m, fp::Exec::serial);
  return r;
}

Character mul(const Character& a, const Character& b) {
  Character c;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) c[x + y] += m * n;
  for (auto it = c.begin(); it != c.end();)
    it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

Character frobenius(const Character& a, int p) {
  Character c;
  for (const auto& [x, m] : a) c[x * p] = m;
  return c;
}

}  // namespace

// ---------------------------------------------------------------- u(sl_2)

Vec UAlgebra::e() const {
  Vec v = alg->zero();
  for (int k = 0; k < p; ++k) v[index(0, k, 1)] = 1;
  return v;
}

Vec UAlgebra::f() const {
  Vec v = alg->zero();
  for (int k = 0; k < p; ++k) v[index(1, k, 0)] = 1;
  return v;
}

Vec UAlgebra::h() const {
  Vec v = alg->zero();
  for (int k = 0; k < p; ++k) v[index(0, k, 0)] = alg->F.from_int(k);
  return v;
}

Vec UAlgebra::idem(int k) const {
  Vec v = alg->zero();
  v[index(0, mod(k, p), 0)] = 1;
  return v;
}

UAlgebra build_u(int p) {
  if (p == 2) throw std::invalid_argument("build_u: p = 2 is not supported");
  if (p < 2 || !fp::is_prime(u64(p))) throw std::invalid_argument("build_u: p must be an odd prime");
  int n = p * p * p;
  auto idx = [p](int c, int k, int a) { return (c * p + k) * p + a; };
  // integral left actions of e, f and 1_j on coefficient vectors
  auto actF = [&](const IVecLL& v) {
    IVecLL w(n, 0);
    for (int c = 0; c + 1 < p; ++c)
      for (int k = 0; k < p; ++k)
        for (int a = 0; a < p; ++a) w[idx(c + 1, k, a)] += v[idx(c, k, a)];
    return w;
  };
  auto actI = [&](int j, const IVecLL& v) {
    IVecLL w(n, 0);
    for (int c = 0; c < p; ++c)
      for (int k = 0; k < p; ++k)
        if (mod(k - 2 * c, p) == j)
          for (int a = 0; a < p; ++a) w[idx(c, k, a)] = v[idx(c, k, a)];
    return w;
  };
  auto actE = [&](const IVecLL& v) {
    IVecLL w(n, 0);
    for (int c = 0; c < p; ++c)
      for (int k = 0; k < p; ++k) {
        long long S = 0;
        for (int m = 0; m < c; ++m) S += symrep(mod(k - 2 * m, p), p);
        for (int a = 0; a < p; ++a) {
          long long x = v[idx(c, k, a)];
          if (!x) continue;
          if (a + 1 < p) w[idx(c, mod(k + 2, p), a + 1)] += x;
          if (c > 0) w[idx(c - 1, k, a)] += x * S;
        }
      }
    return w;
  };
  std::vector<IVecLL> table(size_t(n) * n);
  for (int c = 0; c < p; ++c)
    for (int k = 0; k < p; ++k)
      for (int a = 0; a < p; ++a)
        for (int j = 0; j < n; ++j) {
          IVecLL v(n, 0);
          v[j] = 1;
          for (int t = 0; t < a; ++t) v = actE(v);
          v = actI(k, v);
          for (int t = 0; t < c; ++t) v = actF(v);
          table[size_t(idx(c, k, a)) * n + j] = std::move(v);
        }
  std::vector<std::string> labels(n);
  std::vector<IVec> xg(n);
  for (int c = 0; c < p; ++c)
    for (int k = 0; k < p; ++k)
      for (int a = 0; a < p; ++a) {
        labels[idx(c, k, a)] = "f" + std::to_string(c) + "_1" + std::to_string(k) + "_e" + std::to_string(a);
        xg[idx(c, k, a)] = {2 * (a - c)};
      }
  Field F{u32(p)};
  Algebra A = make_algebra(F, n, labels, [&](int i, int j) {
    Vec v(n, 0);
    for (int k = 0; k < n; ++k) v[k] = F.from_int(table[size_t(i) * n + j][k]);
    return v;
  });
  A.one.assign(n, 0);
  for (int k = 0; k < p; ++k) A.one[idx(0, k, 0)] = 1;
  A.xgrading = xg;
  for (int k = 0; k < p; ++k) {
    A.gens.push_back(idx(0, k, 0));
    A.gens.push_back(idx(0, k, 1));
    A.gens.push_back(idx(1, k, 0));
  }
  std::sort(A.gens.begin(), A.gens.end());
  A.check();

  LatticeAlgebra L = make_lattice(unsigned(p), n, labels, [&](int i, int j) {
    q::QVec v(n);
    for (int k = 0; k < n; ++k) v[k] = q::Q(long(table[size_t(i) * n + j][k]));
    return v;
  });
  for (int k = 0; k < p; ++k) L.one[idx(0, k, 0)] = 1;
  L.xgrading = xg;

  UAlgebra U;
  U.p = p;
  U.alg = std::make_shared<const Algebra>(std::move(A));
  U.lattice = std::make_shared<const LatticeAlgebra>(std::move(L));
  U.tau.resize(n);
  for (int c = 0; c < p; ++c)
    for (int k = 0; k < p; ++k)
      for (int a = 0; a < p; ++a) U.tau[idx(c, k, a)] = U.alg->unit(idx(a, k, c));
  return U;
}

Module module_from_ef(const UAlgebra& U, const Matrix& E, const Matrix& Fm, const std::vector<int>& wts) {
  const Field& F = U.alg->F;
  int p = U.p, d = int(wts.size());
  std::vector<Matrix> Ep, Fp, P;
  for (int t = 0; t < p; ++t) {
    Ep.push_back(power(F, E, t));
    Fp.push_back(power(F, Fm, t));
    Matrix pk(d, d);
    for (int r = 0; r < d; ++r)
      if (mod(wts[r], p) == t) pk(r, r) = 1;
    P.push_back(pk);
  }
  Module M;
  M.A = U.alg;
  M.dim = d;
  M.act.resize(U.alg->n);
  for (int c = 0; c < p; ++c)
    for (int k = 0; k < p; ++k)
      for (int a = 0; a < p; ++a)
        M.act[U.index(c, k, a)] =
            fp::multiply(F, Fp[c], fp::multiply(F, P[k], Ep[a], fp::Exec::serial), fp::Exec::serial);
  for (int w : wts) M.xgrading.push_back({w});
  M.check();
  return M;
}

Module simple_module(const UAlgebra& U, int lambda) {
  if (lambda < 0 || lambda >= U.p) throw std::invalid_argument("simple_module: weight not restricted");
  const Field& F = U.alg->F;
  int d = lambda + 1;
  Matrix E(d, d), Fm(d, d);
  std::vector<int> w;
  for (int j = 0; j < d; ++j) {
    w.push_back(lambda - 2 * j);
    if (j + 1 < d) Fm(j + 1, j) = 1;
    if (j > 0) E(j - 1, j) = F.from_int((long long)j * (lambda - j + 1));
  }
  return module_from_ef(U, E, Fm, w);
}

Module baby_verma(const UAlgebra& U, int lambda, Variant v) {
  const Field& F = U.alg->F;
  int p = U.p;
  Matrix E(p, p), Fm(p, p);
  std::vector<int> w;
  if (v == Variant::Z) {
    for (int j = 0; j < p; ++j) {
      w.push_back(lambda - 2 * j);
      if (j + 1 < p) Fm(j + 1, j) = 1;
      if (j > 0) E(j - 1, j) = F.from_int((long long)j * (lambda - j + 1));
    }
  } else {
    int mu = lambda - 2 * (p - 1);
    for (int j = 0; j < p; ++j) {
      w.push_back(mu + 2 * j);
      if (j + 1 < p) E(j + 1, j) = 1;
      if (j > 0) Fm(j - 1, j) = F.from_int(-(long long)j * (mu + j - 1));
    }
  }
  return module_from_ef(U, E, Fm, w);
}

Module coinduced_phi(const UAlgebra& U, int lambda) {
  Module M = left_ideal_module(U.alg, U.idem(lambda));
  return shift(M, 0, IVec{lambda});
}

Module contravariant_dual(const UAlgebra& U, const Module& M) {
  return dual_involution(M, U.tau, true);
}

Module weyl_module(const UAlgebra& U, int m) {
  if (m < 0) throw std::invalid_argument("weyl_module: negative weight");
  const Field& F = U.alg->F;
  int d = m + 1;
  Matrix E(d, d), Fm(d, d);
  std::vector<int> w;
  for (int j = 0; j < d; ++j) {
    w.push_back(m - 2 * j);
    if (j + 1 < d) Fm(j + 1, j) = F.from_int(j + 1);
    if (j > 0) E(j - 1, j) = F.from_int(m - j + 1);
  }
  return module_from_ef(U, E, Fm, w);
}

int weight_dim(const Module& M, int w) {
  int c = 0;
  for (const auto& x : M.xgrading) c += x == IVec{w};
  return c;
}

Character character(const Module& M) {
  if (!M.xgraded()) throw std::invalid_argument("character: module has no X-grading");
  Character c;
  for (const auto& x : M.xgrading) c[x[0]] += 1;
  return c;
}

std::vector<std::vector<int>> u_blocks(const UAlgebra& U) {
  auto cs = central_idempotents(*U.alg);
  std::vector<Module> L;
  for (int l = 0; l < U.p; ++l) L.push_back(simple_module(U, l));
  std::vector<std::vector<int>> blocks;
  for (const auto& c : cs) {
    std::vector<int> b;
    for (int l = 0; l < U.p; ++l)
      if (!L[l].action(c).is_zero()) b.push_back(l);
    blocks.push_back(b);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

UStructure analyse_u(int p) {
  UStructure S;
  S.U = build_u(p);
  S.data = blocks_and_basic(*S.U.alg, Grades{false, true});
  S.blocks = u_blocks(S.U);
  return S;
}

UBlock u_block(const UStructure& S, const std::vector<int>& block) {
  const UAlgebra& U = S.U;
  const Algebra& A = *U.alg;
  const Field& F = A.F;
  struct Item {
    int lambda, nu;
    Vec e;
  };
  std::vector<Item> items;
  for (int c = 0; c < S.data.num_classes(); ++c) {
    const Vec& e = S.data.idempotents[S.data.reps[c]];
    for (int l : block) {
      Module L = simple_module(U, l);
      Matrix m = L.action(e);
      if (m.is_zero()) continue;
      if (fp::rank(F, m) != 1) throw std::logic_error("u_block: idempotent is not primitive");
      int nu = 0;
      for (int j = 0; j < L.dim; ++j)
        if (!fp::is_zero(m.col_vec(j))) nu = L.xgrading[j][0];
      items.push_back({l, nu, e});
    }
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.lambda < b.lambda; });
  if (items.size() != block.size()) throw std::logic_error("u_block: simples and idempotents do not match");
  Vec eB = A.zero();
  for (const auto& it : items) eB = A.add(eB, it.e);
  UBlock B;
  B.basic = corner(A, eB);
  if (!B.basic.alg->xgraded()) throw std::logic_error("u_block: basic algebra lost the X-grading");
  for (const auto& it : items) {
    B.weights.push_back(it.lambda);
    B.vec_weight.push_back(it.nu);
    B.idem.push_back(embedded_coords(B.basic, it.e));
    B.simples.push_back(truncate_module(simple_module(U, it.lambda), B.basic));
  }
  return B;
}

std::vector<std::vector<int>> regular_blocks(const UStructure& S) {
  std::vector<std::vector<int>> r;
  for (const auto& b : S.blocks)
    if (b.size() > 1) r.push_back(b);
  return r;
}

std::vector<std::vector<ExtTable>> block_ext_tables(const UBlock& B, int nmax) {
  int k = int(B.weights.size());
  auto sys = ProjectiveSystem::make(B.basic.alg, Grades{false, true}, B.idem);
  std::vector<Resolution> R(k);
  std::vector<std::vector<ExtTable>> T(k, std::vector<ExtTable>(k));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < k; ++i) R[i] = minimal_resolution(sys, B.simples[i], nmax + 1);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < k * k; ++t) T[t / k][t % k] = ext_table(R[t / k], B.simples[t % k], nmax);
  return T;
}

ParityReport block_parity(const UBlock& B, int p, const std::vector<std::vector<ExtTable>>& tables, int nmax) {
  Alcove A(RootDatum::make("A1"), p);
  auto ldiff = [&](int i, int j, const Degree& s) -> std::optional<int> {
    if (s.size() != 1 || s[0] % p != 0) return std::nullopt;
    Weight a{B.weights[i]}, b{B.weights[j] + s[0]};
    if (!A.is_regular(a) || !A.is_regular(b)) return std::nullopt;
    return A.length(a) - A.length(b);
  };
  return parity_checks(tables, ldiff, nmax);
}

Character untwisted_ext_character(const ExtTable& T, int n, int p) {
  Character c;
  for (const auto& [key, val] : T.entries)
    if (key.first == n && val && key.second.size() == 1 && key.second[0] % p == 0) c[-key.second[0] / p] += val;
  return c;
}

// ---------------------------------------------------------------- Schur

SchurAlgebra schur_algebra(int d, int p) {
  if (d < 0) throw std::invalid_argument("schur_algebra: negative degree");
  if (d > 12) throw std::invalid_argument("schur_algebra: d > 12 exceeds the size guard");
  if (p < 2 || !fp::is_prime(u64(p))) throw std::invalid_argument("schur_algebra: p must be prime");
  SchurAlgebra S;
  S.d = d;
  S.p = p;
  std::map<std::array<int, 4>, int> id;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c) {
        std::array<int, 4> t{a, b, c, d - a - b - c};
        id[t] = int(S.types.size());
        S.types.push_back(t);
      }
  int n = int(S.types.size());
  // z(A,B,C) = #{s : (p,s) ~ A, (s,q) ~ B} for a fixed (p,q) ~ C
  std::vector<std::map<int, long long>> z(size_t(n) * n);
  for (int C = 0; C < n; ++C) {
    const auto& t = S.types[C];
    std::vector<int> ps, qs;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int r = 0; r < t[2 * x + y]; ++r) {
          ps.push_back(x);
          qs.push_back(y);
        }
    for (unsigned s = 0; s < (1u << d); ++s) {
      std::array<int, 4> ta{0, 0, 0, 0}, tb{0, 0, 0, 0};
      for (int r = 0; r < d; ++r) {
        int sr = (s >> r) & 1;
        ++ta[2 * ps[r] + sr];
        ++tb[2 * sr + qs[r]];
      }
      z[size_t(id[ta]) * n + id[tb]][C] += 1;
    }
  }
  std::vector<std::string> labels;
  std::vector<IVec> xg;
  for (const auto& t : S.types) {
    labels.push_back("xi" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]) +
                     std::to_string(t[3]));
    xg.push_back({2 * (t[1] - t[2])});
  }
  Field F{u32(p)};
  Algebra A = make_algebra(F, n, labels, [&](int i, int j) {
    Vec v(n, 0);
    for (const auto& [k, c] : z[size_t(i) * n + j]) v[k] = F.from_int(c);
    return v;
  });
  A.one.assign(n, 0);
  for (int i = 0; i < n; ++i)
    if (S.types[i][1] == 0 && S.types[i][2] == 0) {
      A.one[i] = 1;
      S.weight_idem[S.types[i][0] - S.types[i][3]] = A.unit(i);
    }
  A.xgrading = xg;
  A.check();
  LatticeAlgebra L = make_lattice(unsigned(p), n, labels, [&](int i, int j) {
    q::QVec v(n);
    for (const auto& [k, c] : z[size_t(i) * n + j]) v[k] = q::Q(long(c));
    return v;
  });
  for (int i = 0; i < n; ++i) L.one[i] = A.one[i];
  L.xgrading = xg;
  S.alg = std::make_shared<const Algebra>(std::move(A));
  S.lattice = std::make_shared<const LatticeAlgebra>(std::move(L));
  return S;
}

SchurInstance schur_instance(int d, int p, const std::vector<int>& gamma) {
  std::vector<int> G = gamma;
  std::sort(G.begin(), G.end());
  G.erase(std::unique(G.begin(), G.end()), G.end());
  if (G.empty()) throw std::invalid_argument("schur_instance: empty weight set");
  for (int g : G)
    if (g < 0 || g > d || (d - g) % 2) throw std::invalid_argument("schur_instance: weight not dominant of degree d");
  for (int g : G)
    for (int h = g - 2; h >= 0; h -= 2)
      if (!std::binary_search(G.begin(), G.end(), h))
        throw std::invalid_argument("schur_instance: Gamma is not downward closed");
  SchurAlgebra S = schur_algebra(d, p);
  const Algebra& A = *S.alg;
  Vec eout = A.zero();
  for (const auto& [m, e] : S.weight_idem)
    if (!std::binary_search(G.begin(), G.end(), std::abs(m))) eout = A.add(eout, e);
  QuotientMap Q = quotient_by_idempotent(A, eout);
  SchurInstance I;
  I.d = d;
  I.p = p;
  I.gamma = G;
  I.quotient = Q.alg;
  BasicData D = blocks_and_basic(*Q.alg);
  I.basic = D.basic.alg;
  // highest weight of each simple
  std::vector<int> labels;
  for (int c = 0; c < D.num_classes(); ++c) {
    Module L = inst::simple_top(Q.alg, D.idempotents[D.reps[c]], D.J);
    int best = -1;
    for (const auto& [m, e] : S.weight_idem)
      if (m >= 0 && !L.action(Q.project(e)).is_zero()) best = std::max(best, m);
    labels.push_back(best);
  }
  RadicalGraded R = radical_graded(*D.basic.alg, D.basic_idempotents);
  for (size_t i = 0; i < D.basic_idempotents.size(); ++i)
    if (R.adapted[i] != D.basic_idempotents[i]) throw std::logic_error("schur_instance: idempotent not kept");
  I.graded = R.alg;
  for (size_t i = 0; i < D.basic_idempotents.size(); ++i) I.idem.push_back(R.alg->unit(int(i)));
  I.labels = labels;
  return I;
}

std::vector<std::vector<char>> dominance_order(const std::vector<int>& w) {
  int k = int(w.size());
  std::vector<std::vector<char>> o(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) o[i][j] = w[i] <= w[j] && (w[j] - w[i]) % 2 == 0;
  return o;
}

GradedQH schur_graded_qh(const SchurInstance& I) {
  std::vector<std::string> names;
  for (int l : I.labels) names.push_back(std::to_string(l));
  return graded_qh(I.graded, I.idem, dominance_order(I.labels), names);
}

// ---------------------------------------------------------------- characters

Character weyl_character(int m) {
  Character c;
  for (int j = 0; j <= m; ++j) c[m - 2 * j] = 1;
  return c;
}

Character simple_character(int lambda, int p) {
  if (lambda < 0) throw std::invalid_argument("simple_character: negative weight");
  if (lambda == 0) return {{0, 1}};
  return mul(weyl_character(lambda % p), frobenius(simple_character(lambda / p, p), p));
}

Character delta_p_character(int gamma, int p) {
  if (gamma < 0) throw std::invalid_argument("delta_p_character: negative weight");
  return mul(weyl_character(gamma % p), frobenius(weyl_character(gamma / p), p));
}

Character add(const Character& a, const Character& b, int sign) {
  Character c = a;
  for (const auto& [x, m] : b) c[x] += sign * m;
  for (auto it = c.begin(); it != c.end();)
    it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

int dimension(const Character& c) {
  int s = 0;
  for (const auto& [x, m] : c) s += m;
  return s;
}

std::vector<int> delta_p_decomposition(int m, int p) {
  if (m < 0) throw std::invalid_argument("delta_p_decomposition: negative weight");
  Character R = weyl_character(m);
  std::vector<int> out;
  while (!R.empty()) {
    auto top = std::prev(R.end());
    if (top->second < 0 || top->first < 0)
      throw std::logic_error("delta_p_decomposition: remainder is not a character");
    int g = top->first, k = top->second;
    for (int i = 0; i < k; ++i) out.push_back(g);
    Character D = delta_p_character(g, p);
    for (auto& [x, c] : D) c *= k;
    R = add(R, D, -1);
    for (const auto& [x, c] : R)
      if (c < 0) throw std::logic_error("delta_p_decomposition: negative multiplicity");
  }
  return out;
}

NablaTest nabla_character_test(const Character& chi) {
  NablaTest T;
  Character R = add(chi, {});
  while (!R.empty()) {
    auto top = std::prev(R.end());
    if (top->second < 0 || top->first < 0) break;
    int m = top->first, k = top->second;
    T.mult[m] += k;
    Character W = weyl_character(m);
    for (auto& [x, c] : W) c *= k;
    R = add(R, W, -1);
    bool neg = false;
    for (const auto& [x, c] : R) neg = neg || c < 0;
    if (neg) break;
  }
  T.remainder = R;
  T.holds = R.empty();
  return T;
}

}  // namespace kzl::sl2
