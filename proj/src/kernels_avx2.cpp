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

// Compiled with -mavx2 -mfma -ffp-contract=off; only reached after a runtime
// CPU check. Fused multiply-add appears only where written explicitly.

#include <immintrin.h>

#include "kwsense/kernels.hpp"

namespace kwsense::kernels::avx2 {

namespace {

inline double hsum(__m256d v) noexcept {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  const std::size_t n = a.size();
  const double* pa = a.data();
  const double* pb = b.data();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i + 4), _mm256_loadu_pd(pb + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i), acc0);
  }
  double sum = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) sum += pa[i] * pb[i];
  return sum;
}

DotNorms dot_norms(std::span<const double> a, std::span<const double> b) noexcept {
  const std::size_t n = a.size();
  const double* pa = a.data();
  const double* pb = b.data();
  __m256d dab = _mm256_setzero_pd();
  __m256d daa = _mm256_setzero_pd();
  __m256d dbb = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(pa + i);
    const __m256d vb = _mm256_loadu_pd(pb + i);
    dab = _mm256_fmadd_pd(va, vb, dab);
    daa = _mm256_fmadd_pd(va, va, daa);
    dbb = _mm256_fmadd_pd(vb, vb, dbb);
  }
  DotNorms r{hsum(dab), hsum(daa), hsum(dbb)};
  for (; i < n; ++i) {
    r.dot += pa[i] * pb[i];
    r.norm_a += pa[i] * pa[i];
    r.norm_b += pb[i] * pb[i];
  }
  return r;
}

HalfChords half_chords(std::span<const double> a, std::span<const double> b, double sa,
                       double sb) noexcept {
  const std::size_t n = a.size();
  const double* pa = a.data();
  const double* pb = b.data();
  const __m256d vsa = _mm256_set1_pd(sa);
  const __m256d vsb = _mm256_set1_pd(sb);
  __m256d dd = _mm256_setzero_pd();
  __m256d ss = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // x and y are rounded separately so that equal inputs cancel exactly.
    const __m256d x = _mm256_mul_pd(_mm256_loadu_pd(pa + i), vsa);
    const __m256d y = _mm256_mul_pd(_mm256_loadu_pd(pb + i), vsb);
    const __m256d d = _mm256_sub_pd(x, y);
    const __m256d s = _mm256_add_pd(x, y);
    dd = _mm256_fmadd_pd(d, d, dd);
    ss = _mm256_fmadd_pd(s, s, ss);
  }
  HalfChords r{hsum(dd), hsum(ss)};
  for (; i < n; ++i) {
    const double x = pa[i] * sa;
    const double y = pb[i] * sb;
    r.diff += (x - y) * (x - y);
    r.sum += (x + y) * (x + y);
  }
  return r;
}

// Elementwise kernels avoid FMA so they stay bit-identical to the scalar path.

void accumulate(std::span<double> acc, std::span<const double> x) noexcept {
  const std::size_t n = acc.size();
  double* pa = acc.data();
  const double* px = x.data();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(pa + i, _mm256_add_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(px + i)));
  }
  for (; i < n; ++i) pa[i] += px[i];
}

void axpy(std::span<double> acc, double alpha, std::span<const double> x) noexcept {
  const std::size_t n = acc.size();
  double* pa = acc.data();
  const double* px = x.data();
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(px + i));
    _mm256_storeu_pd(pa + i, _mm256_add_pd(_mm256_loadu_pd(pa + i), prod));
  }
  for (; i < n; ++i) pa[i] += alpha * px[i];
}

void scale(std::span<double> v, double alpha) noexcept {
  const std::size_t n = v.size();
  double* p = v.data();
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(p + i, _mm256_mul_pd(_mm256_loadu_pd(p + i), va));
  for (; i < n; ++i) p[i] *= alpha;
}

}  // namespace kwsense::kernels::avx2
