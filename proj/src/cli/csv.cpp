// SPDX-License-Identifier: Apache-2.0
//
// riscoh: temporal coherence control toolkit for RIS-aided channels
// Copyright (C) 2026 The riscoh authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "riscoh/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

std::string riscoh::cli::format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string riscoh::cli::csv_escape(std::string_view field)
{
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field)
    {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += '"';
    return out;
}

riscoh::cli::CsvWriter::CsvWriter(std::ostream &out, const std::vector<std::string> &header)
    : out_(out), columns_(header.size())
{
    for (std::size_t i = 0; i < header.size(); ++i)
        out_ << (i ? "," : "") << csv_escape(header[i]);
    out_ << '\n';
}

void riscoh::cli::CsvWriter::row(const std::vector<CsvField> &fields)
{
    if (fields.size() != columns_)
        throw std::logic_error("CSV row width does not match the header.");
    for (std::size_t i = 0; i < fields.size(); ++i)
    {
        if (i)
            out_ << ',';
        std::visit([&](const auto &v)
        {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
                out_ << format_number(v);
            else if constexpr (std::is_same_v<T, std::string>)
                out_ << csv_escape(v);
            else
                out_ << v;
        }, fields[i]);
    }
    out_ << '\n';
}
