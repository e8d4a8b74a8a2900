// Copyright 2026 The QReliefF Authors
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
#include <istream>
#include <string>

#include "qrelieff/relieff.hpp"

namespace qrelieff {

inline constexpr const char* kDefaultLabelColumn = "class";

// Header row first; one string label column, every other cell real-valued.
// Class ids are assigned in order of first appearance. Throws DataError.
Dataset parse_csv(std::istream& in, const std::string& label_column,
                  const std::string& source = "<stream>");
Dataset load_csv(const std::filesystem::path& path,
                 const std::string& label_column = kDefaultLabelColumn);

}  // namespace qrelieff
