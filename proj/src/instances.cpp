#include "kzl/instances.hpp"

namespace kzl::inst {

Algebra truncated_polynomial(const Field& F, int k, int grade) {
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
  Algebra A = make_algebra(F, k, labels, [&](int i, int j) {
    Vec v(k, 0);
    if (i + j < k) v[i + j] = 1;
    return v;
  });
  A.one = A.unit(0);
  if (grade >= 0)
    for (int i = 0; i < k; ++i) A.grading.push_back(i * grade);
  if (k > 1) A.gens = {0, 1};
  return A;
}

Algebra quadratic(const Field& F, long long c) {
  u32 cc = F.from_int(c);
  Algebra A = make_algebra(F, 2, {"1", "x"}, [&](int i, int j) {
    Vec v(2, 0);
    if (i == 0) v[j] = 1;
    else if (j == 0) v[i] = 1;
    else v[1] = cc;
    return v;
  });
  A.one = A.unit(0);
  return A;
}

Algebra matrix_algebra(const Field& F, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  Algebra A = make_algebra(F, n * n, labels, [&](int a, int b) {
    Vec v(n * n, 0);
    int i = a / n, j = a % n, k = b / n, l = b % n;
    if (j == k) v[i * n + l] = 1;
    return v;
  });
  A.one = Vec(n * n, 0);
  for (int i = 0; i < n; ++i) A.one[i * n + i] = 1;
  return A;
}

Algebra path_a2(const Field& F, int grade) {
  // 0 = e1, 1 = e2, 2 = a
  Algebra A = make_algebra(F, 3, {"e1", "e2", "a"}, [&](int i, int j) {
    Vec v(3, 0);
    if (i == 0 && j == 0) v[0] = 1;
    if (i == 1 && j == 1) v[1] = 1;
    if (i == 1 && j == 2) v[2] = 1;
    if (i == 2 && j == 0) v[2] = 1;
    return v;
  });
  A.one = {1, 1, 0};
  if (grade >= 0) A.grading = {0, 0, grade};
  return A;
}

Algebra cyclic_group_algebra(const Field& F, int m) {
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back("g^" + std::to_string(i));
  Algebra A = make_algebra(F, m, labels, [&](int i, int j) {
    Vec v(m, 0);
    v[(i + j) % m] = 1;
    return v;
  });
  A.one = A.unit(0);
  if (m > 1) A.gens = {1};
  return A;
}

Algebra upper_triangular(const Field& F, int n) {
  std::vector<std::pair<int, int>> idx;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      idx.push_back({i, j});
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  int d = int(idx.size());
  auto find = [&](int i, int j) {
    for (int t = 0; t < d; ++t)
      if (idx[t] == std::make_pair(i, j)) return t;
    return -1;
  };
  Algebra A = make_algebra(F, d, labels, [&](int a, int b) {
    Vec v(d, 0);
    if (idx[a].second == idx[b].first) v[find(idx[a].first, idx[b].second)] = 1;
    return v;
  });
  A.one = Vec(d, 0);
  for (int i = 0; i < n; ++i) A.one[find(i, i)] = 1;
  for (int t = 0; t < d; ++t) A.grading.push_back(idx[t].second - idx[t].first);
  return A;
}

Module trivial_module(const AlgebraPtr& A, const std::vector<Vec>& rad_basis) {
  Module M = regular_module(A);
  std::vector<Vec> span = rad_basis;
  return quotient_module(M, span);
}

Module simple_top(const AlgebraPtr& A, const Vec& e, const fp::Subspace& J) {
  std::vector<Vec> basis;
  Module P = left_ideal_module(A, e, &basis);
  fp::Subspace Pb = fp::span(A->F, A->n, basis);
  // J P in P-coordinates
  std::vector<Vec> jp;
  for (const auto& j : J.rows())
    for (const auto& b : basis) {
      Vec x = A->mul(j, b);
      if (!fp::is_zero(x)) jp.push_back(Pb.coords(x));
    }
  return quotient_module(P, jp);
}

}  // namespace kzl::inst
