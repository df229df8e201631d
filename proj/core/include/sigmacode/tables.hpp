/*
   Copyright 2026 The sigmacode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef SIGMACODE_TABLES_HPP
#define SIGMACODE_TABLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "sigmacode/bounds.hpp"

namespace sigmacode::tables {

enum class Preset { I, II, III };

/// "I", "II" or "III"; throws InvalidArgument otherwise.
Preset parse_preset(std::string_view text);
std::string_view to_string(Preset p) noexcept;

struct Cell {
    BigInt value;
    std::string text;
};

struct Row {
    long long d = 0;
    Cell extension;
    Cell restriction;
    std::optional<Cell> multiplication;
    Cell ours;
    bounds::Optimum paper;
    std::optional<bounds::Optimum> strict;  // nullopt on an empty strict domain
    std::string strict_text;
    bool diverges = false;
};

struct Table {
    Preset id = Preset::I;
    std::uint64_t q = 0;
    unsigned g = 0;
    long long n = 0;
    std::string title;
    std::vector<Row> rows;
};

Table build(Preset id);

std::string render_md(const Table& t);
std::string render_csv(const Table& t);
std::string render_json(const Table& t);
/// format is md, csv or json.
std::string render(const Table& t, std::string_view format);

}  // namespace sigmacode::tables

#endif
