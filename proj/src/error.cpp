//  Copyright 2026 The headtail Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "headtail/error.hpp"

#include <cmath>

namespace headtail {

void require_probability(double p, const char* name) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw ConfigError(std::string(name) + " must lie in (0, 1], got " + std::to_string(p));
  }
}

}  // namespace headtail
