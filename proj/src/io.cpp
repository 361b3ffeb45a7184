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

#include "cssqec/io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace cssqec::io {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError("cannot read file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw FileError("cannot write file: " + tmp.string());
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            throw FileError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw FileError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

CssCode parse_descriptor(std::string_view text) {
    std::string first;
    std::string second;
    bool seen_separator = false;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line == "---") {
            if (seen_separator) {
                throw std::invalid_argument("code descriptor: more than one '---' separator");
            }
            seen_separator = true;
            continue;
        }
        (seen_separator ? second : first) += line + "\n";
    }
    if (!seen_separator) {
        throw std::invalid_argument("code descriptor: missing '---' separator between C1 and C2 blocks");
    }
    const BinMatrix c1 = parse_matrix(first);
    if (c1.rows() == 0) {
        throw std::invalid_argument("code descriptor: C1 block is empty");
    }
    return make_css_code(c1, parse_matrix(second));
}

std::string format_descriptor(const CssCode& code) {
    return format_matrix(code.tower().c1.generator()) + "---\n" + format_matrix(code.tower().c2.generator());
}

CssCode load_code(const std::string& name_or_path) {
    if (name_or_path == "steane") {
        return CssCode::steane();
    }
    return parse_descriptor(read_file(name_or_path));
}

}  // namespace cssqec::io
