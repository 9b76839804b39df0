#include "kzl/alcove.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace kzl {

Alcove::Alcove(RootDatum R, int p) : R_(std::move(R)), p_(p) {
  if (p < 2) throw std::invalid_argument("p must be a prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("p must be a prime");
  int n = R_.rank();
  Weight a0 = R_.root_to_weight(R_.highest_short_root());
  std::vector<IVec> m(n, IVec(n, 0));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) m[k][j] = (k == j ? 1 : 0) - a0[k] * R_.highest_short_coroot()[j];
  s0_w_ = R_.find_element(m);
  if (s0_w_ < 0) throw std::logic_error("reflection in highest short root not found");
}

bool Alcove::is_regular(const Weight& l) const {
  Weight x = l;
  for (auto& v : x) v += 1;
  for (const auto& cv : R_.positive_coroots())
    if (R_.pairing(x, cv) % p_ == 0) return false;
  return true;
}

std::pair<Weight, Weight> Alcove::restricted_decompose(const Weight& g) const {
  if (!R_.is_dominant(g)) throw std::invalid_argument("restricted_decompose: non-dominant weight");
  Weight g0(g.size()), g1(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    g0[i] = g[i] % p_;
    g1[i] = g[i] / p_;
  }
  return {g0, g1};
}

AffineElement Alcove::identity() const { return {IVec(R_.rank(), 0), 0}; }

AffineElement Alcove::generator(int i) const {
  int n = R_.rank();
  if (i < 0 || i > n) throw std::invalid_argument("invalid affine generator");
  if (i == n) return {R_.highest_short_root(), s0_w_};
  IVec th(n, 0);
  // s_i is the length-one element with word {i}
  for (size_t k = 0; k < R_.weyl_group().size(); ++k) {
    const auto& e = R_.weyl_group()[k];
    if (e.word.size() == 1 && e.word[0] == i) return {th, int(k)};
  }
  throw std::logic_error("simple reflection missing");
}

AffineElement Alcove::compose(const AffineElement& a, const AffineElement& b) const {
  const auto& W = R_.weyl_group();
  auto m = R_.compose(W[a.w].matrix, W[b.w].matrix);
  AffineElement c;
  c.w = R_.find_element(m);
  IVec wb = R_.act_root(W[a.w].word, b.theta);
  c.theta.resize(a.theta.size());
  for (size_t i = 0; i < a.theta.size(); ++i) c.theta[i] = a.theta[i] + wb[i];
  return c;
}

Weight Alcove::apply_scaled(const AffineElement& z, const Weight& xs) const {
  // xs holds h * x; returns h * z(x)
  Weight r = R_.apply_matrix(R_.weyl_group()[z.w].matrix, xs);
  Weight t = R_.root_to_weight(z.theta);
  int h = R_.coxeter_number();
  for (size_t i = 0; i < r.size(); ++i) r[i] += h * p_ * t[i];
  return r;
}

Weight Alcove::dot(const AffineElement& z, const Weight& l) const {
  Weight x = l;
  for (auto& v : x) v += 1;
  x = R_.apply_matrix(R_.weyl_group()[z.w].matrix, x);
  Weight t = R_.root_to_weight(z.theta);
  for (size_t i = 0; i < x.size(); ++i) x[i] += p_ * t[i] - 1;
  return x;
}

std::vector<int> Alcove::walk_to_bottom(Weight& x, long long scale, AffineElement& z) const {
  // x is scale * (rho-shifted point); reflect into the bottom alcove,
  // recording z with original = z(final)
  int n = R_.rank();
  const IVec& a0v = R_.highest_short_coroot();
  Weight a0 = R_.root_to_weight(R_.highest_short_root());
  z = identity();
  std::vector<int> word;
  long long P = scale * p_;
  for (int guard = 0; guard < 1000000; ++guard) {
    int neg = -1;
    for (int i = 0; i < n; ++i)
      if (x[i] < 0) {
        neg = i;
        break;
      }
    if (neg >= 0) {
      x = R_.reflect(neg, x);
      z = compose(z, generator(neg));
      word.push_back(neg);
      continue;
    }
    long long v = R_.pairing(x, a0v);
    if (v > P) {
      long long c = v - P;
      for (int k = 0; k < n; ++k) x[k] -= int(c * a0[k]);
      z = compose(z, generator(n));
      word.push_back(n);
      continue;
    }
    return word;
  }
  throw std::logic_error("alcove walk did not terminate");
}

AlcoveAddress Alcove::address(const Weight& tau) const {
  if (int(tau.size()) != R_.rank()) throw std::invalid_argument("weight dimension mismatch");
  if (!is_regular(tau)) throw std::invalid_argument("singular weight has no alcove address");
  Weight x = tau;
  for (auto& v : x) v += 1;
  AlcoveAddress A;
  Weight fin = x;
  A.word = walk_to_bottom(fin, 1, A.z);
  A.lambda0 = fin;
  for (auto& v : A.lambda0) v -= 1;
  if (dot(A.z, A.lambda0) != tau) throw std::logic_error("alcove address inconsistent");
  return A;
}

int Alcove::length(const Weight& tau) const {
  AlcoveAddress A = address(tau);
  int l = -int(R_.weyl_group()[A.z.w].word.size());
  Weight t = R_.root_to_weight(A.z.theta);
  for (const auto& cv : R_.positive_coroots()) l += R_.pairing(t, cv);
  return l;
}

int Alcove::length_oracle(const Weight& tau) const {
  if (int(tau.size()) != R_.rank()) throw std::invalid_argument("weight dimension mismatch");
  for (int v : tau)
    if (std::abs(v) > 100000) throw std::invalid_argument("length_oracle: weight out of range");
  if (!is_regular(tau)) throw std::invalid_argument("singular weight");
  int h = R_.coxeter_number();
  Weight x = tau;
  for (auto& v : x) v += 1;
  int count = 0;
  for (const auto& cv : R_.positive_coroots()) {
    // scaled by h: interior point p*rho/h of C+ and the point tau+rho
    long long a = (long long)p_ * R_.pairing(R_.rho(), cv);
    long long b = (long long)h * R_.pairing(x, cv);
    long long K = std::abs(b) / ((long long)h * p_) + 2;
    for (long long k = -K; k <= K; ++k) {
      long long wall = k * h * p_;
      if (a < wall && wall < b) ++count;   // C+ on the negative side
      if (b < wall && wall < a) --count;
    }
  }
  return count;
}

bool Alcove::parity_check(const Weight& tau, const IVec& theta) const {
  if (int(theta.size()) != R_.rank()) throw std::invalid_argument("theta must lie in the root lattice");
  Weight t = R_.root_to_weight(theta);
  Weight tau2 = tau;
  for (size_t i = 0; i < tau.size(); ++i) tau2[i] += p_ * t[i];
  int d = length(tau) - length(tau2);
  return d % 2 == 0;
}

bool Alcove::jantzen_contains(const Weight& l) const {
  Weight x = l;
  for (auto& v : x) v += 1;
  return R_.pairing(x, R_.highest_short_coroot()) <= p_ * (p_ - R_.coxeter_number() + 2);
}

int Alcove::coxeter_length(const AffineElement& z) const {
  int h = R_.coxeter_number();
  Weight x0(R_.rank(), p_);  // h * (p rho / h)
  Weight y = apply_scaled(z, x0);
  int count = 0;
  for (const auto& cv : R_.positive_coroots()) {
    long long a = R_.pairing(x0, cv), b = R_.pairing(y, cv);
    long long lo = std::min(a, b), hi = std::max(a, b);
    long long P = (long long)h * p_;
    // multiples of P strictly between lo and hi
    auto fl = [](long long u, long long d) { return u >= 0 ? u / d : -((-u + d - 1) / d); };
    count += int(fl(hi - 1, P) - fl(lo, P));
  }
  return count;
}

std::vector<int> Alcove::reduced_word(const AffineElement& z) const {
  Weight x0(R_.rank(), p_);
  Weight y = apply_scaled(z, x0);
  AffineElement zz;
  auto w = walk_to_bottom(y, R_.coxeter_number(), zz);
  if (!(zz == z)) throw std::logic_error("reduced word does not reproduce element");
  return w;
}

bool Alcove::bruhat_leq_elements(const AffineElement& u, const AffineElement& v) const {
  {
    std::lock_guard<std::mutex> g(memo_mu_);
    auto it = memo_.find({u, v});
    if (it != memo_.end()) return it->second;
  }
  bool res;
  int lv = coxeter_length(v), lu = coxeter_length(u);
  if (lu > lv) {
    res = false;
  } else if (lv == 0) {
    res = u == v;
  } else {
    auto word = reduced_word(v);
    AffineElement s = generator(word.back());
    AffineElement vs = compose(v, s);
    AffineElement us = compose(u, s);
    if (coxeter_length(us) < lu)
      res = bruhat_leq_elements(us, vs);
    else
      res = bruhat_leq_elements(u, vs);
  }
  std::lock_guard<std::mutex> g(memo_mu_);
  memo_[{u, v}] = res;
  return res;
}

bool Alcove::bruhat_leq(const Weight& mu, const Weight& gamma) const {
  AlcoveAddress a = address(mu), b = address(gamma);
  if (a.lambda0 != b.lambda0) return false;
  return bruhat_leq_elements(a.z, b.z);
}

bool Alcove::leq(const Weight& mu, const Weight& gamma, Order o) const {
  if (o == Order::bruhat) return bruhat_leq(mu, gamma);
  return R_.leq(mu, gamma, o);
}

std::vector<Weight> Alcove::below(const Weight& g, Order o) const {
  int n = R_.rank();
  std::vector<Weight> out;
  if (o == Order::bruhat) {
    AlcoveAddress A = address(g);
    auto word = reduced_word(A.z);
    if (word.size() > 22) throw std::invalid_argument("bruhat interval too large");
    std::set<AffineElement> elems;
    size_t m = word.size();
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
      AffineElement u = identity();
      for (size_t t = 0; t < m; ++t)
        if (mask >> t & 1) u = compose(u, generator(word[t]));
      elems.insert(u);
    }
    for (const auto& u : elems) {
      Weight mu = dot(u, A.lambda0);
      if (R_.is_dominant(mu)) out.push_back(mu);
    }
    return out;
  }
  // dominant mu <= g has simple-root coordinates bounded by those of g,
  // and <mu, alpha_i^vee> <= 2 * coordinate
  IVec c = R_.weight_to_root_num(g);
  IVec bound(n);
  for (int i = 0; i < n; ++i) bound[i] = std::max(0, (2 * c[i] + R_.det() - 1) / R_.det());
  Weight mu(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (is_regular(mu) && R_.leq(mu, g, o)) out.push_back(mu);
      return;
    }
    for (int v = 0; v <= bound[i]; ++v) {
      mu[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

PosetIdeal Alcove::generate_ideal(const std::vector<Weight>& gens, Order o) const {
  if (gens.empty()) throw std::invalid_argument("empty ideal");
  std::set<Weight> S;
  for (const auto& g : gens) {
    if (!R_.is_dominant(g)) throw std::invalid_argument("generator not dominant");
    if (!is_regular(g)) throw std::invalid_argument("singular generator");
    for (auto& m : below(g, o))
      if (is_regular(m)) S.insert(m);
  }
  PosetIdeal I;
  I.type = R_.type();
  I.p = p_;
  I.order = o;
  I.elements.assign(S.begin(), S.end());
  return I;
}

void Alcove::validate(const PosetIdeal& I) const {
  if (I.elements.empty()) throw std::invalid_argument("empty ideal");
  for (const auto& g : I.elements)
    if (!R_.is_dominant(g) || !is_regular(g))
      throw std::invalid_argument("ideal element not regular dominant");
  PosetIdeal J = generate_ideal(I.elements, I.order);
  std::vector<Weight> a = I.elements;
  std::sort(a.begin(), a.end());
  if (a != J.elements) throw std::invalid_argument("set is not downward closed");
}

IdealReport Alcove::report(const PosetIdeal& I) const {
  IdealReport r;
  std::set<Weight> S(I.elements.begin(), I.elements.end());
  r.stable = true;
  r.inside_jantzen = true;
  std::set<AffineElement> alcoves;
  for (const auto& g : I.elements) {
    if (!S.count(restricted_decompose(g).first)) r.stable = false;
    if (!jantzen_contains(g)) r.inside_jantzen = false;
    alcoves.insert(address(g).z);
  }
  r.a = int(alcoves.size());
  r.prime_bound_ok = p_ > 6 * r.a + 3 * R_.coxeter_number() - 4;
  return r;
}

std::vector<Weight> Alcove::coset_reps(const Weight& omega) const {
  int n = R_.rank();
  if (std::gcd(p_, R_.det()) != 1)
    throw std::invalid_argument("p divides the index of connection");
  std::vector<Weight> out;
  IVec c(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      Weight w = R_.root_to_weight(c);
      for (int k = 0; k < n; ++k) w[k] += omega[k];
      out.push_back(w);
      return;
    }
    for (int v = 0; v < p_; ++v) {
      c[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace kzl
