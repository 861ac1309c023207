// gtapl - ground-to-air mmWave path-loss modelling library
// Copyright (C) 2026 gtapl developers
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

#ifndef GTA_ERROR_HPP
#define GTA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gta
{

enum class errc
{
    domain = 1,        // argument outside the mathematical domain of an operation
    geometry,          // inconsistent transmitter/UAV/blocker placement
    insufficient_data, // too few samples to fit
    rank_deficient,    // regression has no unique solution
    partial_data,      // a required link type is missing from the data
    parse,             // malformed file, config or token
    io,                // filesystem failure
};

class Error : public std::runtime_error
{
  public:
    Error(errc code, const std::string &what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

} // namespace gta

#endif
