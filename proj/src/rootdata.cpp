#include "kzl/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace kzl {

Order parse_order(const std::string& s) {
  if (s == "dominance" || s == "dom") return Order::dominance;
  if (s == "cone" || s == "rational-cone") return Order::cone;
  if (s == "bruhat") return Order::bruhat;
  throw std::invalid_argument("unknown order: " + s);
}

std::string order_name(Order o) {
  switch (o) {
    case Order::dominance: return "dominance";
    case Order::cone: return "cone";
    case Order::bruhat: return "bruhat";
  }
  return "?";
}

RootDatum RootDatum::make(const std::string& t) {
  RootDatum R;
  R.type_ = t;
  if (t == "A1") {
    R.cartan_ = {{2}};
    R.sym_ = {1};
    R.pos_ = {{1}};
    R.h_ = 2;
  } else if (t == "A2") {
    R.cartan_ = {{2, -1}, {-1, 2}};
    R.sym_ = {1, 1};
    R.pos_ = {{1, 0}, {0, 1}, {1, 1}};
    R.h_ = 3;
  } else if (t == "B2") {
    // alpha_1 long, alpha_2 short
    R.cartan_ = {{2, -1}, {-2, 2}};
    R.sym_ = {2, 1};
    R.pos_ = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    R.h_ = 4;
  } else if (t == "G2") {
    // alpha_1 short, alpha_2 long
    R.cartan_ = {{2, -3}, {-1, 2}};
    R.sym_ = {1, 3};
    R.pos_ = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    R.h_ = 6;
  } else if (t == "A3") {
    R.cartan_ = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    R.sym_ = {1, 1, 1};
    R.pos_ = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}};
    R.h_ = 4;
  } else {
    throw std::invalid_argument("unsupported root datum type: " + t);
  }
  R.n_ = int(R.cartan_.size());
  R.finish();
  return R;
}

namespace {

long long det_int(std::vector<std::vector<long long>> m) {
  // fraction-free elimination, small sizes only
  int n = int(m.size());
  long long sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

void RootDatum::finish() {
  for (int i = 0; i < n_; ++i) {
    if (cartan_[i][i] != 2) throw std::logic_error("cartan diagonal");
    for (int j = 0; j < n_; ++j) {
      if (i != j && cartan_[i][j] > 0) throw std::logic_error("cartan off-diagonal");
      if (sym_[i] * cartan_[i][j] != sym_[j] * cartan_[j][i])
        throw std::logic_error("cartan not symmetrizable by table");
    }
  }
  // (alpha,alpha)/2 relative to the symmetrizer
  auto half_norm = [&](const IVec& c) {
    long long s = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s += (long long)c[i] * c[j] * sym_[i] * cartan_[i][j];
    return s / 2;
  };
  copos_.clear();
  int best = -1, best_ht = -1;
  long long min_norm = -1;
  for (const auto& a : pos_) {
    long long d = half_norm(a);
    if (min_norm < 0 || d < min_norm) min_norm = d;
  }
  for (size_t r = 0; r < pos_.size(); ++r) {
    const auto& a = pos_[r];
    long long d = half_norm(a);
    IVec cv(n_);
    for (int j = 0; j < n_; ++j) {
      long long num = (long long)a[j] * sym_[j];
      if (num % d != 0) throw std::logic_error("non-integral coroot");
      cv[j] = int(num / d);
    }
    copos_.push_back(cv);
    int ht = 0;
    for (int x : a) ht += x;
    if (d == min_norm && ht > best_ht) {
      best_ht = ht;
      best = int(r);
    }
  }
  a0_ = pos_[best];
  a0v_ = copos_[best];

  std::vector<std::vector<long long>> C(n_, std::vector<long long>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) C[i][j] = cartan_[i][j];
  det_ = int(det_int(C));
  adj_.assign(n_, IVec(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      // adj[i][j] = (-1)^{i+j} minor(j,i)
      std::vector<std::vector<long long>> M;
      for (int r = 0; r < n_; ++r) {
        if (r == j) continue;
        std::vector<long long> row;
        for (int c = 0; c < n_; ++c)
          if (c != i) row.push_back(C[r][c]);
        M.push_back(row);
      }
      long long m = n_ == 1 ? 1 : det_int(M);
      adj_[i][j] = int(((i + j) % 2 ? -1 : 1) * m);
    }

  // Weyl group by breadth-first search; words are lex-first reduced words
  auto gen = [&](int i) {
    std::vector<IVec> S(n_, IVec(n_, 0));
    for (int k = 0; k < n_; ++k)
      for (int l = 0; l < n_; ++l) S[k][l] = (k == l ? 1 : 0) - (l == i ? cartan_[k][i] : 0);
    return S;
  };
  std::vector<std::vector<IVec>> gens;
  for (int i = 0; i < n_; ++i) gens.push_back(gen(i));
  std::vector<IVec> id(n_, IVec(n_, 0));
  for (int i = 0; i < n_; ++i) id[i][i] = 1;
  std::map<std::vector<IVec>, int> seen;
  W_.clear();
  W_.push_back({{}, id});
  seen[id] = 0;
  for (size_t q = 0; q < W_.size(); ++q) {
    for (int i = 0; i < n_; ++i) {
      auto m = compose(W_[q].matrix, gens[i]);
      if (seen.count(m)) continue;
      WeylElement e;
      e.word = W_[q].word;
      e.word.push_back(i);
      e.matrix = m;
      seen[m] = int(W_.size());
      W_.push_back(e);
    }
  }
  w0_ = 0;
  for (size_t k = 0; k < W_.size(); ++k)
    if (W_[k].word.size() > W_[w0_].word.size()) w0_ = int(k);
  Weight r = rho();
  Weight img = apply_matrix(W_[w0_].matrix, r);
  for (int i = 0; i < n_; ++i)
    if (img[i] != -r[i]) throw std::logic_error("longest element does not send rho to -rho");
  if (pairing(rho(), a0v_) != h_ - 1) throw std::logic_error("<rho, a0v> != h-1");
}

std::vector<IVec> RootDatum::compose(const std::vector<IVec>& a,
                                     const std::vector<IVec>& b) const {
  std::vector<IVec> c(n_, IVec(n_, 0));
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k)
      if (a[i][k])
        for (int j = 0; j < n_; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Weight RootDatum::apply_matrix(const std::vector<IVec>& m, const Weight& l) const {
  Weight r(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += m[i][j] * l[j];
  return r;
}

int RootDatum::find_element(const std::vector<IVec>& m) const {
  for (size_t k = 0; k < W_.size(); ++k)
    if (W_[k].matrix == m) return int(k);
  return -1;
}

int RootDatum::pairing(const Weight& l, const IVec& cv) const {
  if (int(l.size()) != n_ || int(cv.size()) != n_)
    throw std::invalid_argument("pairing: dimension mismatch");
  int s = 0;
  for (int i = 0; i < n_; ++i) s += l[i] * cv[i];
  return s;
}

Weight RootDatum::root_to_weight(const IVec& b) const {
  if (int(b.size()) != n_) throw std::invalid_argument("root: dimension mismatch");
  Weight w(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) w[i] += cartan_[i][j] * b[j];
  return w;
}

IVec RootDatum::weight_to_root_num(const Weight& l) const {
  IVec r(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += adj_[i][j] * l[j];
  return r;
}

bool RootDatum::is_dominant(const Weight& l) const {
  return std::all_of(l.begin(), l.end(), [](int x) { return x >= 0; });
}

bool RootDatum::leq(const Weight& mu, const Weight& lambda, Order o) const {
  if (int(mu.size()) != n_ || int(lambda.size()) != n_)
    throw std::invalid_argument("leq: dimension mismatch");
  Weight d(n_);
  for (int i = 0; i < n_; ++i) d[i] = lambda[i] - mu[i];
  IVec c = weight_to_root_num(d);
  // the cone spanned by positive roots is the simplicial cone on simple roots
  for (int i = 0; i < n_; ++i) {
    if (c[i] < 0) return false;
    if (o == Order::dominance && c[i] % det_ != 0) return false;
  }
  if (o == Order::bruhat) throw std::invalid_argument("bruhat order needs a prime; use alcove");
  return true;
}

Weight RootDatum::reflect(int i, const Weight& l) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("invalid generator index");
  Weight r = l;
  int c = l[i];
  for (int k = 0; k < n_; ++k) r[k] -= c * cartan_[k][i];
  return r;
}

Weight RootDatum::act(const std::vector<int>& word, const Weight& l) const {
  Weight r = l;
  for (size_t t = word.size(); t-- > 0;) r = reflect(word[t], r);
  return r;
}

Weight RootDatum::dot(const std::vector<int>& word, const Weight& l) const {
  Weight x = l;
  for (auto& v : x) v += 1;
  x = act(word, x);
  for (auto& v : x) v -= 1;
  return x;
}

IVec RootDatum::act_root(const std::vector<int>& word, const IVec& beta) const {
  IVec b = beta;
  for (size_t t = word.size(); t-- > 0;) {
    int i = word[t];
    if (i < 0 || i >= n_) throw std::invalid_argument("invalid generator index");
    int c = 0;
    for (int j = 0; j < n_; ++j) c += cartan_[i][j] * b[j];
    b[i] -= c;
  }
  return b;
}

Weight RootDatum::opposition(const Weight& l) const {
  Weight r = apply_matrix(W_[w0_].matrix, l);
  for (auto& v : r) v = -v;
  return r;
}

}  // namespace kzl
