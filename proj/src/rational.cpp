#include "kzl/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace kzl::q {

Q parse(const std::string& s) {
  Q x;
  if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  x.canonicalize();
  return x;
}

std::string str(const Q& x) {
  Q y = x;
  y.canonicalize();
  return y.get_num().get_str() + "/" + y.get_den().get_str();
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rs, int cols) {
  QMatrix m(int(rs.size()), cols);
  for (size_t i = 0; i < rs.size(); ++i)
    for (int j = 0; j < cols; ++j) m(int(i), j) = rs[i][j];
  return m;
}

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Q& x) { return sgn(x) == 0; });
}

void axpy(QVec& x, const Q& c, const QVec& y) {
  if (sgn(c) == 0) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (sgn(y[i]) != 0) x[i] += c * y[i];
}

std::vector<int> rref(QMatrix& m) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (sgn(m(i, c)) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int k = 0; k < m.cols; ++k) std::swap(m(sel, k), m(r, k));
    Q iv = 1 / m(r, c);
    for (int k = c; k < m.cols; ++k) m(r, k) *= iv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Q f = m(i, c);
      for (int k = c; k < m.cols; ++k)
        if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(QMatrix m) { return int(rref(m).size()); }

QMatrix kernel(const QMatrix& m) {
  QMatrix r = m;
  auto piv = rref(r);
  std::vector<int> is_piv(m.cols, -1);
  for (size_t i = 0; i < piv.size(); ++i) is_piv[piv[i]] = int(i);
  std::vector<int> fr;
  for (int j = 0; j < m.cols; ++j)
    if (is_piv[j] < 0) fr.push_back(j);
  QMatrix k(int(fr.size()), m.cols);
  for (size_t t = 0; t < fr.size(); ++t) {
    k(int(t), fr[t]) = 1;
    for (size_t i = 0; i < piv.size(); ++i) k(int(t), piv[i]) = -r(int(i), fr[t]);
  }
  return k;
}

QVec QSubspace::reduce(QVec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    Q c = v[piv_[i]];
    if (sgn(c) != 0) axpy(v, -c, rows_[i]);
  }
  return v;
}

bool QSubspace::add(const QVec& v0) {
  QVec v = reduce(v0);
  int c = -1;
  for (int j = 0; j < n_; ++j)
    if (sgn(v[j]) != 0) {
      c = j;
      break;
    }
  if (c < 0) return false;
  Q iv = 1 / v[c];
  for (auto& x : v) x *= iv;
  for (auto& r : rows_)
    if (sgn(r[c]) != 0) axpy(r, -Q(r[c]), v);
  auto it = std::lower_bound(piv_.begin(), piv_.end(), c);
  size_t pos = size_t(it - piv_.begin());
  piv_.insert(it, c);
  rows_.insert(rows_.begin() + long(pos), std::move(v));
  return true;
}

QVec QSubspace::coords(const QVec& v) const {
  QVec c(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
  return c;
}

int valuation(const mpz_class& x, unsigned p) {
  if (x == 0) return INT_MAX;
  mpz_class y = abs(x);
  int v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), p)) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int valuation(const Q& x, unsigned p) {
  if (sgn(x) == 0) return INT_MAX;
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

bool is_plocal(const Q& x, unsigned p) {
  return !mpz_divisible_ui_p(x.get_den().get_mpz_t(), p);
}

fp::u32 reduce_mod(const Q& x, const fp::Field& F) {
  if (!is_plocal(x, F.p)) throw std::domain_error("rational not p-local: " + str(x));
  unsigned long n = mpz_fdiv_ui(x.get_num().get_mpz_t(), F.p);
  unsigned long d = mpz_fdiv_ui(x.get_den().get_mpz_t(), F.p);
  return F.mul(fp::u32(n), F.inv(fp::u32(d)));
}

}  // namespace kzl::q
