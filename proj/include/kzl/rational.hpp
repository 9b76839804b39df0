#pragma once
// Exact rational linear algebra (GMP) and p-local helpers.

#include <gmpxx.h>

#include <climits>
#include <string>
#include <vector>

#include "kzl/fp.hpp"

namespace kzl::q {

using Q = mpq_class;
using QVec = std::vector<Q>;

Q parse(const std::string& s);
std::string str(const Q& x);

struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Q> a;
  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  Q& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const Q& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
  static QMatrix from_rows(const std::vector<QVec>& rs, int cols);
};

bool is_zero(const QVec& v);
void axpy(QVec& x, const Q& c, const QVec& y);
std::vector<int> rref(QMatrix& m);
int rank(QMatrix m);
QMatrix kernel(const QMatrix& m);

class QSubspace {
 public:
  QSubspace() = default;
  explicit QSubspace(int ambient) : n_(ambient) {}
  int ambient() const { return n_; }
  int dim() const { return int(rows_.size()); }
  const std::vector<QVec>& rows() const { return rows_; }
  QVec reduce(QVec v) const;
  bool contains(const QVec& v) const { return is_zero(reduce(v)); }
  bool add(const QVec& v);
  QVec coords(const QVec& v) const;

 private:
  int n_ = 0;
  std::vector<QVec> rows_;
  std::vector<int> piv_;
};

// p-adic valuation; INT_MAX for zero
int valuation(const Q& x, unsigned p);
int valuation(const mpz_class& x, unsigned p);
bool is_plocal(const Q& x, unsigned p);
fp::u32 reduce_mod(const Q& x, const fp::Field& F);

}  // namespace kzl::q
