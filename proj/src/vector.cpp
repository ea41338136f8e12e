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

#include "kwsense/vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kwsense/errors.hpp"
#include "kwsense/kernels.hpp"

namespace kwsense {

namespace {

void check_components(const std::vector<double>& data) {
  if (data.empty()) throw DomainError("vector must have at least one component");
  auto bad = std::find_if(data.begin(), data.end(), [](double x) { return !std::isfinite(x); });
  if (bad != data.end()) {
    throw DomainError("non-finite vector component at index " +
                      std::to_string(bad - data.begin()));
  }
}

}  // namespace

Vector::Vector(std::vector<double> components) : data_(std::move(components)) {
  check_components(data_);
}

Vector::Vector(std::initializer_list<double> components) : data_(components) {
  check_components(data_);
}

double squared_norm(VectorView v) noexcept { return kernels::dot(v, v); }

Vector centroid(std::span<const VectorView> vectors) {
  if (vectors.empty()) throw DomainError("no vectors to aggregate");
  const std::size_t dim = vectors.front().size();
  std::vector<double> sum(dim, 0.0);
  for (const VectorView v : vectors) {
    if (v.size() != dim) {
      throw DomainError("centroid over mixed dimensions (" + std::to_string(dim) + " vs " +
                        std::to_string(v.size()) + ")");
    }
    kernels::accumulate(sum, v);
  }
  kernels::scale(sum, 1.0 / static_cast<double>(vectors.size()));
  return Vector(std::move(sum));
}

Vector centroid(std::span<const Vector> vectors) {
  std::vector<VectorView> views(vectors.begin(), vectors.end());
  return centroid(std::span<const VectorView>(views));
}

}  // namespace kwsense
