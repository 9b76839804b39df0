// Wall times of the main kernels, serial reference against the OpenMP path.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "kzl/forced.hpp"
#include "kzl/koszul.hpp"
#include "kzl/sl2lab.hpp"
#include "kzl/structure.hpp"

using namespace kzl;

namespace {

template <class Fn>
double time_it(Fn f, int reps = 1) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

Matrix random_matrix(const Field& F, int r, int c, std::mt19937& rng) {
  Matrix m(r, c);
  for (auto& x : m.a) x = rng() % F.p;
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 400;
  std::printf("threads: %d\n", omp_get_max_threads());
  Field F(10007);
  std::mt19937 rng(1);
  Matrix a = random_matrix(F, n, n, rng), b = random_matrix(F, n, n, rng);
  for (auto ex : {fp::Exec::serial, fp::Exec::parallel}) {
    const char* tag = ex == fp::Exec::serial ? "serial" : "parallel";
    std::printf("multiply %dx%d %-8s %.4f s\n", n, n, tag, time_it([&] { fp::multiply(F, a, b, ex); }));
    std::printf("rank     %dx%d %-8s %.4f s\n", n, n, tag, time_it([&] { fp::rank(F, a, ex); }));
  }
  auto U = sl2::build_u(5);
  for (auto ex : {fp::Exec::serial, fp::Exec::parallel})
    std::printf("radical u(sl2,5) %-8s %.4f s\n", ex == fp::Exec::serial ? "serial" : "parallel",
                time_it([&] { radical(*U.alg, ex); }));
  std::printf("forced grading u(sl2,5) %.4f s\n", time_it([&] { forced_grading(*U.lattice); }));
  auto S = sl2::analyse_u(5);
  auto B = sl2::u_block(S, S.blocks[0]);
  std::printf("block ext tables p=5, n<=6 %.4f s\n", time_it([&] { sl2::block_ext_tables(B, 6); }));
  auto I = sl2::schur_instance(6, 2, {0, 2});
  std::printf("sqkoszul S(2,6) p=2 %.4f s\n", time_it([&] { is_standard_qkoszul(sl2::schur_graded_qh(I), 4); }));
  return 0;
}
