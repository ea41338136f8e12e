// Copyright 2026 the kwsense authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>

#include "kwsense/kernels.hpp"

namespace kwsense::kernels {

namespace scalar {

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

DotNorms dot_norms(std::span<const double> a, std::span<const double> b) noexcept {
  DotNorms r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.dot += a[i] * b[i];
    r.norm_a += a[i] * a[i];
    r.norm_b += b[i] * b[i];
  }
  return r;
}

HalfChords half_chords(std::span<const double> a, std::span<const double> b, double sa,
                       double sb) noexcept {
  HalfChords r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a[i] * sa;
    const double y = b[i] * sb;
    r.diff += (x - y) * (x - y);
    r.sum += (x + y) * (x + y);
  }
  return r;
}

void accumulate(std::span<double> acc, std::span<const double> x) noexcept {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += x[i];
}

void axpy(std::span<double> acc, double alpha, std::span<const double> x) noexcept {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += alpha * x[i];
}

void scale(std::span<double> v, double alpha) noexcept {
  for (double& x : v) x *= alpha;
}

}  // namespace scalar

namespace {

struct KernelTable {
  double (*dot)(std::span<const double>, std::span<const double>) noexcept;
  DotNorms (*dot_norms)(std::span<const double>, std::span<const double>) noexcept;
  HalfChords (*half_chords)(std::span<const double>, std::span<const double>, double,
                            double) noexcept;
  void (*accumulate)(std::span<double>, std::span<const double>) noexcept;
  void (*axpy)(std::span<double>, double, std::span<const double>) noexcept;
  void (*scale)(std::span<double>, double) noexcept;
};

constexpr KernelTable kScalarTable{&scalar::dot, &scalar::dot_norms, &scalar::half_chords,
                                   &scalar::accumulate,
                                   &scalar::axpy, &scalar::scale};
#if KWSENSE_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2Table{&avx2::dot, &avx2::dot_norms, &avx2::half_chords,
                                 &avx2::accumulate,
                                 &avx2::axpy, &avx2::scale};
#endif

Isa probe() noexcept {
#if KWSENSE_HAVE_AVX2_KERNELS
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

const KernelTable* table_for(Isa isa) noexcept {
#if KWSENSE_HAVE_AVX2_KERNELS
  if (isa == Isa::kAvx2) return &kAvx2Table;
#endif
  (void)isa;
  return &kScalarTable;
}

std::atomic<const KernelTable*>& active_table() noexcept {
  static std::atomic<const KernelTable*> table{table_for(detected_isa())};
  return table;
}

const KernelTable& current() noexcept {
  return *active_table().load(std::memory_order_relaxed);
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kAvx2:
      return "avx2";
    case Isa::kScalar:
      break;
  }
  return "scalar";
}

Isa detected_isa() noexcept {
  static const Isa isa = probe();
  return isa;
}

Isa active_isa() noexcept {
  return current().dot == kScalarTable.dot ? Isa::kScalar : Isa::kAvx2;
}

void set_active_isa(Isa isa) noexcept {
  if (isa == Isa::kAvx2 && detected_isa() != Isa::kAvx2) isa = Isa::kScalar;
  active_table().store(table_for(isa), std::memory_order_relaxed);
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  return current().dot(a, b);
}

DotNorms dot_norms(std::span<const double> a, std::span<const double> b) noexcept {
  return current().dot_norms(a, b);
}

HalfChords half_chords(std::span<const double> a, std::span<const double> b, double sa,
                       double sb) noexcept {
  return current().half_chords(a, b, sa, sb);
}

void accumulate(std::span<double> acc, std::span<const double> x) noexcept {
  current().accumulate(acc, x);
}

void axpy(std::span<double> acc, double alpha, std::span<const double> x) noexcept {
  current().axpy(acc, alpha, x);
}

void scale(std::span<double> v, double alpha) noexcept { current().scale(v, alpha); }

}  // namespace kwsense::kernels
