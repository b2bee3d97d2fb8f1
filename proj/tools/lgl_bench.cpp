// Times the serial and OpenMP kernels on the same inputs and checks that
// they agree.

#include <chrono>
#include <cstdio>
#include <functional>

#include "lgl/instance.hpp"
#include "lgl/kernels.hpp"
#include "lgl/structure.hpp"

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const char* what, double serial, double omp, bool same) {
  std::printf("%-28s %10.2f %10.2f %8.2fx  %s\n", what, serial, omp, serial / omp, same ? "same" : "DIFFERENT");
}

}  // namespace

int main() {
  namespace k = lgl::kernels;
  std::printf("threads: %d\n", k::max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel (instance)", "serial ms", "omp ms", "speedup");

  for (auto [p, n, r] : {std::tuple{2, 3, 1}, std::tuple{3, 3, 1}, std::tuple{2, 4, 2}}) {
    const auto inst = lgl::Instance::standard(p, n, r);
    char label[64];
    auto pred = [&inst](const lgl::Mat& m) { return lgl::is_member(inst, m); };

    std::snprintf(label, sizeof label, "filter (%d,%d,%d)", p, n, r);
    std::vector<lgl::Mat> a, b;
    const double fs = time_ms([&] { a = k::serial::filter_matrices(p, n, pred); }, 1);
    const double fo = time_ms([&] { b = k::omp::filter_matrices(p, n, pred); }, 1);
    row(label, fs, fo, a == b);

    const lgl::Semigroup s(inst, 1 << 20);
    k::MatIndex index;
    for (lgl::Index i = 0; i < s.size(); ++i) index.emplace(s.at(i), i);
    std::snprintf(label, sizeof label, "cayley (%d,%d,%d) |S|=%zu", p, n, r, s.size());
    std::vector<lgl::Index> ts, to;
    const double cs = time_ms([&] { ts = k::serial::cayley_table(s.elements(), index); }, 1);
    const double co = time_ms([&] { to = k::omp::cayley_table(s.elements(), index); }, 1);
    row(label, cs, co, ts == to);

    std::snprintf(label, sizeof label, "ideals (%d,%d,%d)", p, n, r);
    std::vector<lgl::Bitset> is, io;
    const double is_ms = time_ms(
        [&] {
          is = k::serial::two_sided_ideals(s.table(), k::serial::left_ideals(s.table()),
                                           k::serial::right_ideals(s.table()));
        },
        1);
    const double io_ms = time_ms(
        [&] {
          io = k::omp::two_sided_ideals(s.table(), k::omp::left_ideals(s.table()), k::omp::right_ideals(s.table()));
        },
        1);
    row(label, is_ms, io_ms, is == io);

    std::snprintf(label, sizeof label, "generating (%d,%d,%d)", p, n, r);
    const lgl::IndexSet units = lgl::j_class(s, inst.top());
    std::vector<lgl::IndexSet> pairs;
    for (std::size_t i = 0; i < units.size() && pairs.size() < 20000; ++i)
      for (std::size_t j = i + 1; j < units.size() && pairs.size() < 20000; ++j) pairs.push_back({units[i], units[j]});
    std::ptrdiff_t gs = 0, go = 0;
    const double gs_ms = time_ms([&] { gs = k::serial::first_generating(s.table(), pairs); }, 1);
    const double go_ms = time_ms([&] { go = k::omp::first_generating(s.table(), pairs); }, 1);
    row(label, gs_ms, go_ms, gs == go);
  }
  return 0;
}
