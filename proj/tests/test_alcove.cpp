#include <random>

#include "doctest.h"
#include "kzl/alcove.hpp"

using namespace kzl;

TEST_CASE("regularity and restricted decomposition") {
  Alcove A(RootDatum::make("A1"), 5);
  CHECK(!A.is_regular({4}));
  CHECK(A.is_regular({7}));
  Alcove B(RootDatum::make("A2"), 5);
  CHECK(B.is_regular({1, 1}));
  CHECK(A.restricted_decompose({13}) == std::make_pair(Weight{3}, Weight{2}));
  CHECK(A.restricted_decompose({4}) == std::make_pair(Weight{4}, Weight{0}));
  Alcove C(RootDatum::make("A2"), 3);
  CHECK(C.restricted_decompose({4, 5}) == std::make_pair(Weight{1, 2}, Weight{1, 1}));
  CHECK_THROWS(A.restricted_decompose({-1}));
}

TEST_CASE("alcove addresses and lengths, A1 p=5") {
  Alcove A(RootDatum::make("A1"), 5);
  auto a1 = A.address({1});
  CHECK(a1.z == A.identity());
  auto a7 = A.address({7});
  CHECK(a7.z.theta == IVec{1});
  CHECK(A.root_datum().weyl_group()[a7.z.w].word.size() == 1);
  CHECK(a7.lambda0 == Weight{1});
  auto a11 = A.address({11});
  CHECK(a11.z.theta == IVec{1});
  CHECK(a11.z.w == 0);
  CHECK(a11.lambda0 == Weight{1});
  CHECK(A.length({1}) == 0);
  CHECK(A.length({11}) == 2);
  CHECK(A.length({7}) == 1);
  CHECK(A.length_oracle({11}) == 2);
  CHECK(A.length_oracle({7}) == 1);
  CHECK(A.length_oracle({1}) == 0);
  CHECK_THROWS(A.address({4}));
  CHECK_THROWS(A.length({9}));
}

TEST_CASE("length agrees with the wall count on a box") {
  for (const char* t : {"A1", "A2", "B2", "G2"}) {
    for (int p : {5, 7}) {
      Alcove A(RootDatum::make(t), p);
      int n = A.root_datum().rank();
      int B = n == 1 ? 40 : 14;
      IVec c(n, -B);
      for (;;) {
        if (A.is_regular(c)) {
          CHECK(A.length(c) == A.length_oracle(c));
          auto ad = A.address(c);
          CHECK(A.dot(ad.z, ad.lambda0) == c);
        }
        int k = 0;
        while (k < n && ++c[k] > B) c[k++] = -B;
        if (k == n) break;
      }
    }
  }
}

TEST_CASE("parity") {
  Alcove A(RootDatum::make("A1"), 5);
  CHECK(A.parity_check({1}, {1}));
  CHECK(A.parity_check({7}, {1}));
  CHECK(A.parity_check({7}, {0}));
  CHECK(A.length({17}) == 3);
  Alcove B(RootDatum::make("A2"), 5);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int x = -2; x <= 2; ++x)
        for (int y = -2; y <= 2; ++y) {
          Weight tau{a, b};
          Weight t = B.root_datum().root_to_weight({x, y});
          Weight tau2{a + 5 * t[0], b + 5 * t[1]};
          if (B.is_regular(tau) && B.is_regular(tau2)) CHECK(B.parity_check(tau, {x, y}));
        }
}

TEST_CASE("dominant affine elements: alcove length equals Coxeter length") {
  for (const char* t : {"A1", "A2", "B2"}) {
    Alcove A(RootDatum::make(t), 7);
    const RootDatum& R = A.root_datum();
    int n = R.rank();
    std::set<AffineElement> seen{A.identity()};
    std::vector<AffineElement> frontier{A.identity()};
    for (int depth = 0; depth < 6; ++depth) {
      std::vector<AffineElement> next;
      for (const auto& z : frontier)
        for (int i = 0; i <= n; ++i) {
          AffineElement y = A.compose(z, A.generator(i));
          if (seen.insert(y).second) next.push_back(y);
        }
      frontier = next;
    }
    int tested = 0;
    for (const auto& z : seen) {
      Weight w = A.dot(z, Weight(n, 0));
      CHECK(int(A.reduced_word(z).size()) == A.coxeter_length(z));
      if (!R.is_dominant(w)) continue;
      CHECK(A.length(w) == A.coxeter_length(z));
      ++tested;
    }
    CHECK(tested > 3);
  }
}

TEST_CASE("2 ht(theta) is even") {
  RootDatum R = RootDatum::make("G2");
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      Weight t = R.root_to_weight({x, y});
      int s = 0;
      for (const auto& cv : R.positive_coroots()) s += R.pairing(t, cv);
      CHECK(s % 2 == 0);
    }
}

TEST_CASE("Jantzen region") {
  Alcove A(RootDatum::make("A1"), 5);
  CHECK(A.jantzen_contains({24}));
  CHECK(!A.jantzen_contains({25}));
  CHECK(A.jantzen_contains({0}));
  Alcove B(RootDatum::make("A2"), 5);
  CHECK(B.jantzen_contains({1, 1}));
  CHECK(B.jantzen_contains({9, 9}));
  CHECK(!B.jantzen_contains({10, 9}));
}

TEST_CASE("ideals and reports") {
  Alcove A(RootDatum::make("A1"), 5);
  auto I = A.generate_ideal({{7}}, Order::dominance);
  CHECK(I.elements == std::vector<Weight>{{1}, {3}, {5}, {7}});
  auto K = A.generate_ideal({{7}}, Order::cone);
  CHECK(K.elements == std::vector<Weight>{{0}, {1}, {2}, {3}, {5}, {6}, {7}});
  CHECK(A.generate_ideal({{1}}, Order::dominance).elements == std::vector<Weight>{{1}});
  CHECK_THROWS(A.generate_ideal({{4}}, Order::dominance));
  CHECK_THROWS(A.generate_ideal({}, Order::dominance));

  auto r1 = A.report(I);
  CHECK(!r1.stable);
  CHECK(r1.a == 2);
  auto r2 = A.report(K);
  CHECK(r2.stable);
  CHECK(r2.a == 2);
  CHECK(r2.inside_jantzen);
  CHECK(!r2.prime_bound_ok);
  PosetIdeal Z{"A1", 5, Order::dominance, {{0}}};
  A.validate(Z);
  auto r3 = A.report(Z);
  CHECK(r3.stable);
  CHECK(r3.a == 1);
  CHECK(!r3.prime_bound_ok);
  PosetIdeal bad{"A1", 5, Order::dominance, {{3}}};
  CHECK_THROWS(A.validate(bad));
}

TEST_CASE("random cone ideals are stable") {
  std::mt19937 rng(7);
  for (const char* t : {"A1", "A2", "B2"}) {
    Alcove A(RootDatum::make(t), 5);
    int n = A.root_datum().rank();
    for (int trial = 0; trial < 15; ++trial) {
      Weight g(n);
      do
        for (auto& v : g) v = int(rng() % (n == 1 ? 30 : 9));
      while (!A.is_regular(g));
      auto I = A.generate_ideal({g}, Order::cone);
      CHECK(A.report(I).stable);
    }
  }
}

TEST_CASE("Bruhat order") {
  Alcove A(RootDatum::make("A1"), 5);
  // A1: the orbit of 1 is linearly ordered by alcove length
  CHECK(A.bruhat_leq({1}, {7}));
  CHECK(A.bruhat_leq({7}, {11}));
  CHECK(!A.bruhat_leq({11}, {7}));
  CHECK(!A.bruhat_leq({0}, {7}));  // different orbits
  auto I = A.generate_ideal({{11}}, Order::bruhat);
  CHECK(I.elements == std::vector<Weight>{{1}, {7}, {11}});
  Alcove B(RootDatum::make("A2"), 5);
  // on generators: e <= s_i
  for (int i = 0; i <= 2; ++i) {
    CHECK(B.bruhat_leq_elements(B.identity(), B.generator(i)));
    CHECK(!B.bruhat_leq_elements(B.generator(i), B.identity()));
  }
}

TEST_CASE("coset representatives") {
  Alcove A(RootDatum::make("A1"), 3);
  CHECK(A.coset_reps({0}) == std::vector<Weight>{{0}, {2}, {4}});
  CHECK(A.coset_reps({1}) == std::vector<Weight>{{1}, {3}, {5}});
  Alcove B(RootDatum::make("A2"), 5);
  auto reps = B.coset_reps({1, 0});
  CHECK(reps.size() == 25);
  std::set<std::pair<int, int>> classes;
  for (auto& w : reps) classes.insert({((w[0] % 5) + 5) % 5, ((w[1] % 5) + 5) % 5});
  CHECK(classes.size() == 25);
  Alcove C(RootDatum::make("A2"), 3);
  CHECK_THROWS(C.coset_reps({0, 0}));
}
