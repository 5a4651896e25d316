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

#include "memlens/canonical.hpp"

#include <algorithm>
#include <cstdint>

#include "memlens/error.hpp"

namespace memlens {
namespace {

#include "unicode_tables.inc"

// Hangul syllable composition/decomposition is algorithmic (UAX #15 §3.12).
constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto byte = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    int extra = 0;
    if (byte < 0x80) {
      cp = byte;
    } else if ((byte & 0xE0) == 0xC0) {
      cp = byte & 0x1F;
      extra = 1;
    } else if ((byte & 0xF0) == 0xE0) {
      cp = byte & 0x0F;
      extra = 2;
    } else if ((byte & 0xF8) == 0xF0) {
      cp = byte & 0x07;
      extra = 3;
    } else {
      throw ValidationError("invalid UTF-8 in label");
    }
    if (i + extra >= text.size()) {
      throw ValidationError("invalid UTF-8 in label");
    }
    for (int j = 1; j <= extra; ++j) {
      const auto cont = static_cast<unsigned char>(text[i + j]);
      if ((cont & 0xC0) != 0x80) {
        throw ValidationError("invalid UTF-8 in label");
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    // Reject overlong encodings, surrogates, and out-of-range values.
    static constexpr char32_t kMinForExtra[4] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForExtra[extra] || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw ValidationError("invalid UTF-8 in label");
    }
    out.push_back(cp);
    i += 1 + extra;
  }
  return out;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool in_ranges(const CodepointRange* ranges, std::size_t count, char32_t cp) {
  const auto* end = ranges + count;
  const auto* it = std::upper_bound(
      ranges, end, cp,
      [](char32_t value, const CodepointRange& r) { return value < r.first; });
  return it != ranges && cp <= (it - 1)->last;
}

bool is_punctuation(char32_t cp) {
  return in_ranges(kPunctuationRanges,
                   std::size(kPunctuationRanges), cp);
}

bool is_whitespace(char32_t cp) {
  return in_ranges(kWhitespaceRanges, std::size(kWhitespaceRanges), cp);
}

unsigned char combining_class(char32_t cp) {
  const auto* end = kCccMap + std::size(kCccMap);
  const auto* it = std::lower_bound(
      kCccMap, end, cp,
      [](const CccEntry& e, char32_t value) { return e.cp < value; });
  return (it != end && it->cp == cp) ? it->ccc : 0;
}

void decompose_one(char32_t cp, std::vector<char32_t>& out) {
  if (cp >= kHangulSBase &&
      cp < kHangulSBase + static_cast<char32_t>(kHangulSCount)) {
    const auto index = static_cast<int>(cp - kHangulSBase);
    out.push_back(kHangulLBase + index / kHangulNCount);
    out.push_back(kHangulVBase + (index % kHangulNCount) / kHangulTCount);
    if (index % kHangulTCount != 0) {
      out.push_back(kHangulTBase + index % kHangulTCount);
    }
    return;
  }
  const auto* end = kDecompMap + std::size(kDecompMap);
  const auto* it = std::lower_bound(
      kDecompMap, end, cp,
      [](const DecompEntry& e, char32_t value) { return e.cp < value; });
  if (it != end && it->cp == cp) {
    for (unsigned char j = 0; j < it->len; ++j) {
      out.push_back(kDecompPool[it->offset + j]);
    }
    return;
  }
  out.push_back(cp);
}

std::vector<char32_t> decompose(const std::vector<char32_t>& in) {
  std::vector<char32_t> out;
  out.reserve(in.size());
  for (char32_t cp : in) {
    decompose_one(cp, out);
  }
  return out;
}

std::vector<char32_t> lowercase(const std::vector<char32_t>& in) {
  std::vector<char32_t> out;
  out.reserve(in.size());
  const auto* end = kLowerMap + std::size(kLowerMap);
  for (char32_t cp : in) {
    const auto* it = std::lower_bound(
        kLowerMap, end, cp,
        [](const LowerEntry& e, char32_t value) { return e.cp < value; });
    if (it != end && it->cp == cp) {
      for (unsigned char j = 0; j < it->len; ++j) {
        out.push_back(it->out[j]);
      }
    } else {
      out.push_back(cp);
    }
  }
  return out;
}

// Stable sort of combining-mark runs by combining class (canonical ordering).
void canonical_order(std::vector<char32_t>& cps) {
  std::size_t i = 0;
  while (i < cps.size()) {
    if (combining_class(cps[i]) == 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && combining_class(cps[j]) != 0) {
      ++j;
    }
    std::stable_sort(cps.begin() + i, cps.begin() + j,
                     [](char32_t a, char32_t b) {
                       return combining_class(a) < combining_class(b);
                     });
    i = j;
  }
}

char32_t compose_pair(char32_t first, char32_t second) {
  // Hangul L+V and LV+T.
  if (first >= kHangulLBase &&
      first < kHangulLBase + static_cast<char32_t>(kHangulLCount) &&
      second >= kHangulVBase &&
      second < kHangulVBase + static_cast<char32_t>(kHangulVCount)) {
    const auto l = static_cast<int>(first - kHangulLBase);
    const auto v = static_cast<int>(second - kHangulVBase);
    return kHangulSBase + (l * kHangulVCount + v) * kHangulTCount;
  }
  if (first >= kHangulSBase &&
      first < kHangulSBase + static_cast<char32_t>(kHangulSCount) &&
      (first - kHangulSBase) % kHangulTCount == 0 &&
      second > kHangulTBase &&
      second < kHangulTBase + static_cast<char32_t>(kHangulTCount)) {
    return first + (second - kHangulTBase);
  }
  const auto key = (static_cast<unsigned long long>(first) << 32) |
                   static_cast<unsigned long long>(second);
  const auto* end = kComposeMap + std::size(kComposeMap);
  const auto* it = std::lower_bound(
      kComposeMap, end, key,
      [](const ComposeEntry& e, unsigned long long value) {
        return e.key < value;
      });
  return (it != end && it->key == key) ? it->composite : 0;
}

// Canonical composition (UAX #15 §3.11) over a canonically ordered sequence.
std::vector<char32_t> compose(const std::vector<char32_t>& in) {
  std::vector<char32_t> out;
  out.reserve(in.size());
  std::ptrdiff_t last_starter = -1;
  for (char32_t cp : in) {
    if (last_starter >= 0) {
      const bool unblocked =
          last_starter == static_cast<std::ptrdiff_t>(out.size()) - 1 ||
          combining_class(out.back()) < combining_class(cp);
      if (unblocked) {
        if (const char32_t composite = compose_pair(out[last_starter], cp)) {
          out[last_starter] = composite;
          continue;
        }
      }
    }
    out.push_back(cp);
    if (combining_class(cp) == 0) {
      last_starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
    }
  }
  return out;
}

std::vector<char32_t> canonical_codepoints(std::string_view text) {
  auto cps = decompose(decode_utf8(text));
  cps = lowercase(cps);
  // Lowercasing can reintroduce decomposable codepoints.
  cps = decompose(cps);

  std::vector<char32_t> kept;
  kept.reserve(cps.size());
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (is_punctuation(cp)) {
      continue;
    }
    if (is_whitespace(cp)) {
      pending_space = !kept.empty();
      continue;
    }
    if (pending_space) {
      kept.push_back(U' ');
      pending_space = false;
    }
    kept.push_back(cp);
  }

  canonical_order(kept);
  return compose(kept);
}

}  // namespace

std::string canonicalize_or_empty(std::string_view text) {
  std::string out;
  for (char32_t cp : canonical_codepoints(text)) {
    encode_utf8(cp, out);
  }
  return out;
}

std::string canonicalize(std::string_view label) {
  std::string out = canonicalize_or_empty(label);
  if (out.empty()) {
    throw ValidationError("degenerate label");
  }
  return out;
}

std::vector<std::string> canonical_tokens(std::string_view text) {
  const std::string canonical = canonicalize_or_empty(text);
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start < canonical.size()) {
    std::size_t end = canonical.find(' ', start);
    if (end == std::string::npos) {
      end = canonical.size();
    }
    tokens.push_back(canonical.substr(start, end - start));
    start = end + 1;
  }
  return tokens;
}

}  // namespace memlens
