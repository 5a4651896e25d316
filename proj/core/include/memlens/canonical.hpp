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

#include <string>
#include <string_view>
#include <vector>

namespace memlens {

// Canonical form of a feature label: NFC-normalized, lowercased,
// Unicode-punctuation (category P) removed, whitespace collapsed to single
// spaces and trimmed. Idempotent. Locale-independent: all Unicode data is
// compiled in (see scripts/gen_unicode_tables.py).
//
// Throws ValidationError("degenerate label") when nothing is left after
// normalization, and ValidationError on invalid UTF-8.
std::string canonicalize(std::string_view label);

//! Same pipeline, but an empty result is returned instead of thrown.
std::string canonicalize_or_empty(std::string_view text);

//! Canonicalized text split on spaces. Empty input yields an empty vector.
std::vector<std::string> canonical_tokens(std::string_view text);

}  // namespace memlens
