// Copyright 2026 The tpg authors
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

#ifndef TPG_FORMAT_HPP
#define TPG_FORMAT_HPP

#include <string>
#include <string_view>

#include "tpg/errors.hpp"
#include "tpg/matrix.hpp"

namespace tpg {

// The `tpg v1` text format (UTF-8, LF line endings):
//   line 1: `tpg v1`
//   line 2: `<n> <m>`
//   lines 3..n+2: m space-separated decimal non-negative integers per row
// Trailing newline required. Lines starting with `#` are comments and are
// skipped wherever they appear. Profiles use the identical format.

/// Parses the `tpg v1` format. Throws parse_error with the offending
/// physical line number on malformed input.
AvailabilityMatrix parse_instance(std::string_view text);

/// Inverse of parse_instance: parse(serialize(A)) == A.
std::string serialize_instance(const AvailabilityMatrix& matrix);

/// Reads and parses a file. File-system failures surface as parse_error on
/// line 0.
AvailabilityMatrix load_instance(const std::string& path);

}  // namespace tpg

#endif  // TPG_FORMAT_HPP
