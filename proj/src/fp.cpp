#include "kzl/fp.hpp"

#include <algorithm>

namespace kzl::fp {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(u32 prime) : p(prime) {
  if (!is_prime(prime) || prime >= (1u << 31))
    throw std::invalid_argument("not a usable prime: " + std::to_string(prime));
}

u32 Field::pow(u32 a, u64 e) const {
  u64 r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return u32(r);
}

u32 Field::inv(u32 a) const {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p - 2);
}

u32 Field::from_int(long long v) const {
  long long r = v % (long long)p;
  if (r < 0) r += p;
  return u32(r);
}

Vec Matrix::col_vec(int j) const {
  Vec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_row(int i, const Vec& v) {
  std::copy(v.begin(), v.end(), row(i));
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](u32 x) { return x == 0; });
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rs, int cols) {
  Matrix m(int(rs.size()), cols);
  for (size_t i = 0; i < rs.size(); ++i) m.set_row(int(i), rs[i]);
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cs, int rows) {
  Matrix m(rows, int(cs.size()));
  for (size_t j = 0; j < cs.size(); ++j)
    for (int i = 0; i < rows; ++i) m(i, int(j)) = cs[j][i];
  return m;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}

Matrix multiply(const Field& F, const Matrix& x, const Matrix& y, Exec ex) {
  if (x.cols != y.rows) throw std::invalid_argument("multiply: shape mismatch");
  Matrix z(x.rows, y.cols);
  const u64 p = F.p;
  const bool par = ex == Exec::parallel && size_t(x.rows) * x.cols * y.cols > 32768;
  // for p < 2^16 every product is < 2^32, so 64-bit sums never overflow
  const bool lazy = p < (1u << 16);
#pragma omp parallel for schedule(static) if (par)
  for (int i = 0; i < x.rows; ++i) {
    std::vector<u64> acc(y.cols, 0);
    for (int k = 0; k < x.cols; ++k) {
      u64 a = x(i, k);
      if (!a) continue;
      const u32* yr = y.row(k);
      if (lazy) {
        for (int j = 0; j < y.cols; ++j) acc[j] += a * yr[j];
      } else {
        for (int j = 0; j < y.cols; ++j) acc[j] = (acc[j] + a * yr[j]) % p;
      }
    }
    u32* zr = z.row(i);
    for (int j = 0; j < y.cols; ++j) zr[j] = u32(acc[j] % p);
  }
  return z;
}

Matrix add(const Field& F, const Matrix& x, const Matrix& y) {
  Matrix z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = F.add(z.a[i], y.a[i]);
  return z;
}

Matrix scale(const Field& F, const Matrix& x, u32 c) {
  Matrix z = x;
  for (auto& v : z.a) v = F.mul(v, c);
  return z;
}

void axpy(const Field& F, Matrix& x, u32 c, const Matrix& y) {
  if (!c) return;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (y.a[i]) x.a[i] = F.add(x.a[i], F.mul(c, y.a[i]));
}

Vec apply(const Field& F, const Matrix& m, const Vec& v) {
  Vec r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    u64 s = 0;
    const u32* mr = m.row(i);
    for (int j = 0; j < m.cols; ++j) {
      if (v[j] && mr[j]) s = (s + u64(mr[j]) * v[j]) % F.p;
    }
    r[i] = u32(s);
  }
  return r;
}

Vec apply_left(const Field& F, const Vec& v, const Matrix& m) {
  Vec r(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    if (!v[i]) continue;
    const u32* mr = m.row(i);
    for (int j = 0; j < m.cols; ++j)
      if (mr[j]) r[j] = F.add(r[j], F.mul(v[i], mr[j]));
  }
  return r;
}

void axpy(const Field& F, Vec& x, u32 c, const Vec& y) {
  if (!c) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (y[i]) x[i] = F.add(x[i], F.mul(c, y[i]));
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](u32 x) { return x == 0; });
}

namespace {

// row_dst -= f * row_src, columns [from, cols)
inline void eliminate_row(u32* dst, const u32* src, u32 f, int from, int cols,
                          u64 p) {
  const u64 nf = p - f;
  for (int k = from; k < cols; ++k)
    if (src[k]) dst[k] = u32((dst[k] + nf * src[k]) % p);
}

}  // namespace

std::vector<int> rref(const Field& F, Matrix& m, Exec ex) {
  std::vector<int> piv;
  int r = 0;
  const u64 p = F.p;
  const bool par = ex == Exec::parallel && size_t(m.rows) * m.cols > 16384;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, c)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      std::swap_ranges(m.row(sel), m.row(sel) + m.cols, m.row(r));
    u32* pr = m.row(r);
    u32 iv = F.inv(pr[c]);
    for (int k = c; k < m.cols; ++k) pr[k] = F.mul(pr[k], iv);
    const int rows = m.rows, cols = m.cols, rr = r;
    if (par) {
#pragma omp parallel for schedule(static)
      for (int i = 0; i < rows; ++i) {
        if (i == rr) continue;
        u32* ri = m.row(i);
        if (ri[c]) eliminate_row(ri, pr, ri[c], c, cols, p);
      }
    } else {
      for (int i = 0; i < rows; ++i) {
        if (i == rr) continue;
        u32* ri = m.row(i);
        if (ri[c]) eliminate_row(ri, pr, ri[c], c, cols, p);
      }
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(const Field& F, Matrix m, Exec ex) { return int(rref(F, m, ex).size()); }

Matrix kernel(const Field& F, const Matrix& m, Exec ex) {
  Matrix r = m;
  auto piv = rref(F, r, ex);
  std::vector<int> is_piv(m.cols, -1);
  for (size_t i = 0; i < piv.size(); ++i) is_piv[piv[i]] = int(i);
  std::vector<int> free;
  for (int j = 0; j < m.cols; ++j)
    if (is_piv[j] < 0) free.push_back(j);
  Matrix k(int(free.size()), m.cols);
  for (size_t t = 0; t < free.size(); ++t) {
    int f = free[t];
    k(int(t), f) = 1;
    for (size_t i = 0; i < piv.size(); ++i)
      k(int(t), piv[i]) = F.neg(r(int(i), f));
  }
  return k;
}

std::optional<Vec> solve(const Field& F, const Matrix& m, const Vec& b, Exec ex) {
  Matrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    std::copy(m.row(i), m.row(i) + m.cols, aug.row(i));
    aug(i, m.cols) = b[i];
  }
  auto piv = rref(F, aug, ex);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  Vec x(m.cols, 0);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(int(i), m.cols);
  return x;
}

std::optional<Matrix> inverse(const Field& F, const Matrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    std::copy(m.row(i), m.row(i) + n, aug.row(i));
    aug(i, n + i) = 1;
  }
  auto piv = rref(F, aug);
  if (int(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i) std::copy(aug.row(i) + n, aug.row(i) + 2 * n, inv.row(i));
  return inv;
}

Vec Subspace::reduce(Vec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    u32 c = v[piv_[i]];
    if (c) axpy(F_, v, F_.neg(c), rows_[i]);
  }
  return v;
}

bool Subspace::add(const Vec& v0) {
  Vec v = reduce(v0);
  int c = -1;
  for (int j = 0; j < n_; ++j)
    if (v[j]) {
      c = j;
      break;
    }
  if (c < 0) return false;
  u32 iv = F_.inv(v[c]);
  for (auto& x : v) x = F_.mul(x, iv);
  for (auto& r : rows_)
    if (r[c]) axpy(F_, r, F_.neg(r[c]), v);
  auto it = std::lower_bound(piv_.begin(), piv_.end(), c);
  size_t pos = size_t(it - piv_.begin());
  piv_.insert(it, c);
  rows_.insert(rows_.begin() + long(pos), std::move(v));
  return true;
}

Vec Subspace::coords(const Vec& v) const {
  Vec c(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
  return c;
}

Subspace span(const Field& F, int ambient, const std::vector<Vec>& vs) {
  Subspace s(F, ambient);
  for (const auto& v : vs) s.add(v);
  return s;
}

Subspace intersect(const Field& F, const Subspace& a, const Subspace& b) {
  // x = sum c_i a_i = sum d_j b_j  <=>  [A^T | -B^T] (c,d) = 0
  int n = a.ambient();
  int da = a.dim(), db = b.dim();
  Matrix m(n, da + db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < n; ++k) m(k, i) = a.rows()[i][k];
  for (int j = 0; j < db; ++j)
    for (int k = 0; k < n; ++k) m(k, da + j) = F.neg(b.rows()[j][k]);
  Matrix ker = kernel(F, m);
  Subspace out(F, n);
  for (int t = 0; t < ker.rows; ++t) {
    Vec x(n, 0);
    for (int i = 0; i < da; ++i) axpy(F, x, ker(t, i), a.rows()[i]);
    out.add(x);
  }
  return out;
}

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  poly_trim(c);
  return c;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a0, const Poly& b0) {
  Poly a = a0, b = b0;
  poly_trim(a);
  poly_trim(b);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  u32 ilc = F.inv(b.back());
  for (size_t i = a.size(); i-- >= b.size();) {
    u32 c = F.mul(a[i], ilc);
    q[i - (b.size() - 1)] = c;
    if (c)
      for (size_t j = 0; j < b.size(); ++j)
        a[i - (b.size() - 1) + j] = F.sub(a[i - (b.size() - 1) + j], F.mul(c, b[j]));
    if (i == 0) break;
  }
  poly_trim(a);
  poly_trim(q);
  return {q, a};
}

Poly poly_xgcd(const Field& F, const Poly& a0, const Poly& b0, Poly& s, Poly& t) {
  Poly r0 = a0, r1 = b0, s0{1}, s1{}, t0{}, t1{1};
  poly_trim(r0);
  poly_trim(r1);
  auto sub = [&](const Poly& x, const Poly& y) {
    Poly z(std::max(x.size(), y.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i];
    for (size_t i = 0; i < y.size(); ++i) z[i] = F.sub(z[i], y[i]);
    poly_trim(z);
    return z;
  };
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(F, r0, r1);
    Poly s2 = sub(s0, poly_mul(F, q, s1));
    Poly t2 = sub(t0, poly_mul(F, q, t1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (!r0.empty()) {
    u32 iv = F.inv(r0.back());
    for (auto& x : r0) x = F.mul(x, iv);
    for (auto& x : s0) x = F.mul(x, iv);
    for (auto& x : t0) x = F.mul(x, iv);
  }
  s = s0;
  t = t0;
  return r0;
}

u32 poly_eval(const Field& F, const Poly& a, u32 x) {
  u32 r = 0;
  for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

}  // namespace kzl::fp
