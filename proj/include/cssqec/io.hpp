// Copyright 2026 The cssqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cssqec/css_code.hpp"

namespace cssqec::io {

/// Raised for missing or unreadable input files.
class FileError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);

/// Writes `contents` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// A C1 generator block and a C2 generator block separated by a line that
/// reads `---`. An empty C2 block stands for the zero code.
CssCode parse_descriptor(std::string_view text);
std::string format_descriptor(const CssCode& code);

/// Built-in name ("steane") or a path to a descriptor file.
CssCode load_code(const std::string& name_or_path);

}  // namespace cssqec::io
