// Copyright 2026 the memlens project
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

#include "memlens/feature.hpp"

#include <cmath>

#include "memlens/canonical.hpp"
#include "memlens/error.hpp"

namespace memlens {
namespace {

constexpr double kUnitNormTolerance = 1e-6;

bool is_blank(std::string_view text) {
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '\f' &&
        c != '\v') {
      return false;
    }
  }
  return true;
}

double l2_norm(const std::vector<float>& values) {
  double sum = 0.0;
  for (float v : values) {
    sum += static_cast<double>(v) * static_cast<double>(v);
  }
  return std::sqrt(sum);
}

}  // namespace

std::string_view to_string(Modality modality) {
  switch (modality) {
    case Modality::kText:
      return "text";
    case Modality::kImage:
      return "image";
    case Modality::kConcept:
      return "concept";
  }
  return "unknown";
}

Modality modality_from_string(std::string_view name) {
  if (name == "text") return Modality::kText;
  if (name == "image") return Modality::kImage;
  if (name == "concept") return Modality::kConcept;
  throw ValidationError("unknown modality: " + std::string(name));
}

Feature::Feature(std::string label, Modality modality,
                 std::optional<std::vector<float>> embedding)
    : label_(std::move(label)),
      modality_(modality),
      embedding_(std::move(embedding)) {
  if (is_blank(label_)) {
    throw ValidationError("feature label is empty");
  }
  canonical_key_ = canonicalize(label_);
  if (embedding_.has_value()) {
    if (embedding_->empty()) {
      throw ValidationError("feature embedding is empty");
    }
    if (std::abs(l2_norm(*embedding_) - 1.0) > kUnitNormTolerance) {
      throw ValidationError("feature embedding is not unit norm: \"" + label_ +
                            "\"");
    }
  }
}

bool Feature::operator==(const Feature& other) const {
  return label_ == other.label_ && modality_ == other.modality_ &&
         embedding_ == other.embedding_;
}

std::vector<float> unit_normalized(std::vector<float> values) {
  const double norm = l2_norm(values);
  if (!(norm > 1e-12)) {
    throw ValidationError("cannot normalize zero-length embedding");
  }
  for (float& v : values) {
    v = static_cast<float>(static_cast<double>(v) / norm);
  }
  return values;
}

}  // namespace memlens
