#include <set>

#include "doctest.h"
#include "kzl/rootdata.hpp"

using namespace kzl;

namespace {

// mu <= lambda by searching nonnegative integer combinations of simple roots
bool dominance_oracle(const RootDatum& R, const Weight& mu, const Weight& lambda, int bound) {
  int n = R.rank();
  IVec c(n, 0);
  for (;;) {
    Weight w = R.root_to_weight(c);
    bool eq = true;
    for (int i = 0; i < n; ++i) eq = eq && (mu[i] + w[i] == lambda[i]);
    if (eq) return true;
    int k = 0;
    while (k < n && ++c[k] > bound) c[k++] = 0;
    if (k == n) return false;
  }
}

}  // namespace

TEST_CASE("tables") {
  struct Row {
    const char* t;
    int roots, h, W;
  };
  for (Row r : {Row{"A1", 1, 2, 2}, Row{"A2", 3, 3, 6}, Row{"B2", 4, 4, 8}, Row{"G2", 6, 6, 12},
                Row{"A3", 6, 4, 24}}) {
    RootDatum R = RootDatum::make(r.t);
    CHECK(int(R.positive_roots().size()) == r.roots);
    CHECK(R.coxeter_number() == r.h);
    CHECK(int(R.weyl_group().size()) == r.W);
    CHECK(R.pairing(R.rho(), R.highest_short_coroot()) == r.h - 1);
    for (int i = 0; i < R.rank(); ++i) {
      CHECK(R.cartan(i, i) == 2);
      for (int j = 0; j < R.rank(); ++j)
        if (i != j) CHECK(R.cartan(i, j) <= 0);
    }
    // the longest element sends rho to -rho
    Weight m = R.act(R.weyl_group()[R.longest_index()].word, R.rho());
    for (int v : m) CHECK(v == -1);
    // number of positive roots = length of w0
    CHECK(int(R.weyl_group()[R.longest_index()].word.size()) == r.roots);
  }
  CHECK_THROWS(RootDatum::make("E8"));
}

TEST_CASE("pairing examples") {
  RootDatum A1 = RootDatum::make("A1");
  CHECK(A1.pairing({5}, {1}) == 5);
  CHECK(A1.pairing({0}, {1}) == 0);
  RootDatum A2 = RootDatum::make("A2");
  // alpha_0^vee = alpha_1^vee + alpha_2^vee, expanded by hand
  CHECK(A2.pairing({1, 1}, A2.highest_short_coroot()) == 2);
  CHECK(A2.highest_short_coroot() == IVec{1, 1});
}

TEST_CASE("dominance and cone orders") {
  RootDatum A1 = RootDatum::make("A1");
  CHECK(A1.leq({1}, {7}, Order::dominance));
  CHECK(!A1.leq({2}, {7}, Order::dominance));
  CHECK(A1.leq({2}, {7}, Order::cone));
  RootDatum A2 = RootDatum::make("A2");
  CHECK(A2.leq({0, 0}, {1, 1}, Order::dominance));
  CHECK_THROWS(A2.leq({0, 0}, {1, 1}, Order::bruhat));
  for (const char* t : {"A2", "B2", "G2"}) {
    RootDatum R = RootDatum::make(t);
    std::vector<Weight> box;
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) box.push_back({a, b});
    for (const auto& x : box)
      for (const auto& y : box) {
        bool le = R.leq(x, y, Order::dominance);
        CHECK(le == dominance_oracle(R, x, y, 40));
        if (le && R.leq(y, x, Order::dominance)) CHECK(x == y);
        if (le) CHECK(R.leq(x, y, Order::cone));
      }
  }
}

TEST_CASE("dot action") {
  RootDatum A1 = RootDatum::make("A1");
  for (int m = -5; m <= 5; ++m) {
    CHECK(A1.dot({0}, {m}) == Weight{-m - 2});
    CHECK(A1.dot({}, {m}) == Weight{m});
  }
  RootDatum A2 = RootDatum::make("A2");
  CHECK(A2.opposition({1, 1}) == Weight{1, 1});
  CHECK(A2.opposition({1, 0}) == Weight{0, 1});
  CHECK_THROWS(A2.dot({3}, {0, 0}));
  // <w.l + rho, a^vee> = <l + rho, (w^{-1} a)^vee>, with w^{-1} a located in the root table
  for (const char* t : {"A2", "B2", "G2"}) {
    RootDatum R = RootDatum::make(t);
    const auto& pos = R.positive_roots();
    for (const auto& w : R.weyl_group()) {
      std::vector<int> inv(w.word.rbegin(), w.word.rend());
      for (size_t r = 0; r < pos.size(); ++r) {
        IVec b = R.act_root(inv, pos[r]);
        int sign = 1, idx = -1;
        for (size_t s = 0; s < pos.size(); ++s) {
          IVec nb = b;
          for (auto& v : nb) v = -v;
          if (pos[s] == b) idx = int(s);
          if (pos[s] == nb) {
            idx = int(s);
            sign = -1;
          }
        }
        REQUIRE(idx >= 0);
        for (int a = -2; a <= 2; ++a)
          for (int c = -2; c <= 2; ++c) {
            Weight l{a, c};
            Weight wl = R.dot(w.word, l), lr = l;
            for (auto& v : wl) v += 1;
            for (auto& v : lr) v += 1;
            CHECK(R.pairing(wl, R.positive_coroots()[r]) ==
                  sign * R.pairing(lr, R.positive_coroots()[idx]));
          }
      }
    }
  }
}
