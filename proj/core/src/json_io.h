// Copyright 2026 The ccmhe Authors
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
#ifndef CCMHE_SRC_JSON_IO_H_
#define CCMHE_SRC_JSON_IO_H_

#include "ccmhe/config.h"
#include "json.hpp"

namespace ccmhe::internal {

nlohmann::ordered_json config_json(const EstimatorConfig& config);

}  // namespace ccmhe::internal

#endif  // CCMHE_SRC_JSON_IO_H_
