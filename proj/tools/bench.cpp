// Benchmark comparing the OpenMP kernels against their serial references:
// associativity scan, Green's classes, the conjugacy partition and the
// matrix similarity partition.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgconj/conjugacy.hpp"
#include "sgconj/exactla.hpp"
#include "sgconj/families.hpp"
#include "sgconj/green.hpp"

using namespace sgconj;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

template <class F>
double time_it(F&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return ms_since(start);
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n",
              name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

Semigroup random_closure(int degree, int gens, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> point(0, degree - 1);
  std::vector<Transformation> g;
  for (int i = 0; i < gens; ++i) {
    Transformation t;
    t.img.resize(degree);
    for (int k = 0; k < degree; ++k) t.img[k] = point(rng);
    g.push_back(std::move(t));
  }
  return close_generators(g);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run serially\n");
#endif

  Semigroup t4 = full_transformation_monoid(4);
  std::printf("T_4: %d elements\n", t4.size());

  {
    double ser = time_it([&] {
      detail::assoc_violation_serial(t4.raw_table(), t4.size());
    });
    double par = time_it([&] {
      detail::assoc_violation_parallel(t4.raw_table(), t4.size());
    });
    report("associativity scan (T_4)", ser, par);
  }

  Semigroup big = random_closure(5, 4, 20250809);
  std::printf("random degree-5 closure: %d elements\n", big.size());
  {
    double ser = time_it([&] { green_classes_serial(big); });
    double par = time_it([&] { green_classes(big); });
    report("green classes (closure)", ser, par);
  }

  {
    FieldSpec c = FieldSpec::complex_numbers();
    Partition ps, pp;
    double ser = time_it([&] { ps = conjugacy_partition_serial(t4, c); });
    double par = time_it([&] { pp = conjugacy_partition(t4, c); });
    report("conjugacy partition (T_4,C)", ser, par);
    if (ps != pp) {
      std::printf("MISMATCH between serial and parallel partitions\n");
      return 1;
    }
  }

  {
    std::vector<ExactMatrix> reps;
    const auto& forms =
        std::get<std::vector<Transformation>>(t4.provenance()->elements);
    for (const auto& f : forms) reps.push_back(standard_representation(f));
    Partition ps, pp;
    double ser = time_it([&] { ps = similarity_partition_serial(reps); });
    double par = time_it([&] { pp = similarity_partition(reps); });
    report("similarity partition (T_4)", ser, par);
    if (ps != pp) {
      std::printf("MISMATCH between serial and parallel partitions\n");
      return 1;
    }
  }

  return 0;
}
