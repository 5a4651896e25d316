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

#include <string_view>

namespace memlens {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Schema tags for the three on-disk formats. Bump on incompatible change.
inline constexpr std::string_view kCaseSchema = "memlens_case_v1";
inline constexpr std::string_view kIndexSchema = "memlens_index_v1";
inline constexpr std::string_view kReportSchema = "memlens_report_v1";

}  // namespace memlens
