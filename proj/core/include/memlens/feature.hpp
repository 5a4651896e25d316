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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace memlens {

//! Which modality a semantic feature was extracted from.
enum class Modality { kText, kImage, kConcept };

std::string_view to_string(Modality modality);
Modality modality_from_string(std::string_view name);

// One semantic feature: a human-readable label ("Christmas Decorations"),
// its derived canonical key, the source modality, and an optional
// unit-norm embedding. Immutable after construction.
class Feature {
 public:
  // Throws ValidationError when the label is empty after trimming, when it
  // canonicalizes to nothing, or when the embedding is not unit L2 norm
  // (tolerance 1e-6).
  Feature(std::string label, Modality modality,
          std::optional<std::vector<float>> embedding = std::nullopt);

  const std::string& label() const { return label_; }
  const std::string& canonical_key() const { return canonical_key_; }
  Modality modality() const { return modality_; }
  bool has_embedding() const { return embedding_.has_value(); }
  const std::optional<std::vector<float>>& embedding() const {
    return embedding_;
  }

  //! Exact structural equality (label, modality, embedding bytes).
  bool operator==(const Feature& other) const;

 private:
  std::string label_;
  std::string canonical_key_;
  Modality modality_;
  std::optional<std::vector<float>> embedding_;
};

//! Scales a vector to unit L2 norm. Throws ValidationError on (near-)zero
//! input; useful when reading embeddings that were not pre-normalized.
std::vector<float> unit_normalized(std::vector<float> values);

}  // namespace memlens
