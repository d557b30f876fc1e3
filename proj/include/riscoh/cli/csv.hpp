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

#ifndef RISCOH_CLI_CSV_HPP
#define RISCOH_CLI_CSV_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace riscoh::cli
{
    // Shortest decimal form that round-trips to the same double
    std::string format_number(double v);

    // RFC 4180 quoting for fields containing separators, quotes or line breaks
    std::string csv_escape(std::string_view field);

    using CsvField = std::variant<double, std::int64_t, std::uint64_t, std::string>;

    class CsvWriter
    {
    public:
        CsvWriter(std::ostream &out, const std::vector<std::string> &header);

        void row(const std::vector<CsvField> &fields);

    private:
        std::ostream &out_;
        std::size_t columns_;
    };
}

#endif
