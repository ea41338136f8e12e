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

// Dense double-precision inner loops.
//
// Every kernel has a portable scalar reference in `kernels::scalar` and,
// on x86-64, an AVX2+FMA variant in `kernels::avx2`. The unqualified
// entry points dispatch once per process to the widest variant the CPU
// supports. Callers guarantee equal lengths; the kernels do not check.

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace kwsense::kernels {

struct DotNorms {
  double dot = 0.0;
  double norm_a = 0.0;  // squared
  double norm_b = 0.0;  // squared
};

/// Squared norms of x - y and x + y for x = sa*a, y = sb*b.
struct HalfChords {
  double diff = 0.0;
  double sum = 0.0;
};

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Widest ISA usable on this machine.
Isa detected_isa() noexcept;

/// ISA currently used by the dispatching entry points.
Isa active_isa() noexcept;

/// Overrides dispatch (clamped to what the CPU supports). Not thread-safe
/// with respect to concurrent kernel calls; intended for tests and benches.
void set_active_isa(Isa isa) noexcept;

double dot(std::span<const double> a, std::span<const double> b) noexcept;

/// dot(a,b), dot(a,a), dot(b,b) in a single pass. When a and b alias the
/// same data the three results are bitwise equal.
DotNorms dot_norms(std::span<const double> a, std::span<const double> b) noexcept;

/// With sa = 1/|a| and sb = 1/|b|: the chords between the unit vectors
/// a^ and +-b^. Components are formed without fused multiply-add, so equal
/// inputs yield diff == 0 exactly.
HalfChords half_chords(std::span<const double> a, std::span<const double> b, double sa,
                       double sb) noexcept;

/// acc[i] += x[i]
void accumulate(std::span<double> acc, std::span<const double> x) noexcept;

/// acc[i] += alpha * x[i]
void axpy(std::span<double> acc, double alpha, std::span<const double> x) noexcept;

/// v[i] *= alpha
void scale(std::span<double> v, double alpha) noexcept;

namespace scalar {
double dot(std::span<const double> a, std::span<const double> b) noexcept;
DotNorms dot_norms(std::span<const double> a, std::span<const double> b) noexcept;
HalfChords half_chords(std::span<const double> a, std::span<const double> b, double sa,
                       double sb) noexcept;
void accumulate(std::span<double> acc, std::span<const double> x) noexcept;
void axpy(std::span<double> acc, double alpha, std::span<const double> x) noexcept;
void scale(std::span<double> v, double alpha) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define KWSENSE_HAVE_AVX2_KERNELS 1
namespace avx2 {
double dot(std::span<const double> a, std::span<const double> b) noexcept;
DotNorms dot_norms(std::span<const double> a, std::span<const double> b) noexcept;
HalfChords half_chords(std::span<const double> a, std::span<const double> b, double sa,
                       double sb) noexcept;
void accumulate(std::span<double> acc, std::span<const double> x) noexcept;
void axpy(std::span<double> acc, double alpha, std::span<const double> x) noexcept;
void scale(std::span<double> v, double alpha) noexcept;
}  // namespace avx2
#else
#define KWSENSE_HAVE_AVX2_KERNELS 0
#endif

}  // namespace kwsense::kernels
