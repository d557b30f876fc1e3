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

#ifndef RISCOH_CLI_FIGURES_HPP
#define RISCOH_CLI_FIGURES_HPP

#include "riscoh/geometry.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace riscoh::cli
{
    // Stored recipes for the reference figures:
    //   fig2   eta versus N for four receiver positions
    //   fig3a  rho[tau] with theta designed for rho = 0.9 at tau in {250, 500, 750}, N = 100
    //   fig3b  rho[tau] with N designed for rho = 0.9 at tau in {50, 100, 200, 400}, theta = 0
    //   fig4a  rho[100] versus alpha for several (theta, N)
    //   fig4b  rho[100] versus kappa for several alpha, N = 100, theta = 0
    struct FigureOptions
    {
        double wavelength = default_wavelength;

        // Scalar eta replacing the geometric one. fig3b defaults to eta = 1 when
        // unset and geometric_eta is false; the other recipes default to geometry.
        std::optional<double> eta;
        bool geometric_eta = false; // fig3b only: take eta from the geometry at N = 9
    };

    struct FigureOutput
    {
        std::string name;
        std::map<std::string, std::string> files; // file name -> CSV content
        nlohmann::json parameters;                // recipe values, for the manifest
    };

    const std::vector<std::string> &figure_names();

    // Throws std::invalid_argument for an unknown name
    FigureOutput make_figure(const std::string &which, const FigureOptions &opt = {});
}

#endif
