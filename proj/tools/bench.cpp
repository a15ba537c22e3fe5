// Serial reference vs OpenMP kernel for jets, Hankel blocks and the census.
// Each row also checks that both paths agree.

#include <chrono>
#include <cstdio>
#include <random>

#include <omp.h>

#include "ncrs/enumeration.hpp"
#include "ncrs/series.hpp"

using namespace ncrs;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

LinearPresentation random_series(const Field& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<Matrix> M;
  for (int x = 0; x < 2; ++x) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(d(rng));
    M.push_back(std::move(m));
  }
  Vector s(n), g(n);
  for (auto& x : s) x = f.from_int(d(rng));
  for (auto& x : g) x = f.from_int(d(rng));
  return LinearPresentation(f, Alphabet::standard(2), std::move(M), std::move(s), std::move(g));
}

void row(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel, agree ? "agree" : "DIFFER");
}

}  // namespace

int main() {
  std::mt19937 rng(1);
  std::printf("threads: %d\n%-28s %10s %10s %9s\n", omp_get_max_threads(), "kernel", "serial s", "omp s", "speedup");

  for (auto f : {Field::prime(3), Field()}) {
    auto A = random_series(f, 8, rng);
    Jet a, b;
    double ts = seconds([&] { a = jet_serial(A, 13); });
    double tp = seconds([&] { b = jet(A, 13); });
    row(f.is_rational() ? "jet dim 8 deg 13 (Q)" : "jet dim 8 deg 13 (F3)", ts, tp, a.coefficients == b.coefficients);
  }

  for (auto f : {Field::prime(3), Field()}) {
    auto A = random_series(f, 6, rng);
    Matrix a, b;
    double ts = seconds([&] { a = hankel_block_serial(A, 6); });
    double tp = seconds([&] { b = hankel_block(A, 6); });
    row(f.is_rational() ? "hankel block 6 (Q)" : "hankel block 6 (F3)", ts, tp, a == b);
  }

  for (bool units : {false, true}) {
    CensusResult a, b;
    double ts = seconds([&] { a = census_serial(2, 2, 2, units); });
    double tp = seconds([&] { b = census(2, 2, 2, units); });
    row(units ? "census F2 units n=2" : "census F2 n=2", ts, tp, a.counts == b.counts);
  }
  return 0;
}
