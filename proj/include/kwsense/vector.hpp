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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace kwsense {

using VectorView = std::span<const double>;

/// Owned dense vector. Never empty and never holds NaN or infinity.
class Vector {
 public:
  /// Throws DomainError when `components` is empty or non-finite.
  explicit Vector(std::vector<double> components);
  Vector(std::initializer_list<double> components);

  std::size_t dim() const noexcept { return data_.size(); }
  double operator[](std::size_t i) const noexcept { return data_[i]; }
  VectorView view() const noexcept { return data_; }
  operator VectorView() const noexcept { return data_; }
  const std::vector<double>& components() const noexcept { return data_; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> data_;
};

/// Squared Euclidean norm.
double squared_norm(VectorView v) noexcept;

/// Componentwise arithmetic mean. Throws DomainError on an empty input
/// ("no vectors to aggregate") or mixed dimensions.
Vector centroid(std::span<const VectorView> vectors);
Vector centroid(std::span<const Vector> vectors);

}  // namespace kwsense
