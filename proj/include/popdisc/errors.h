// Copyright 2026 The popdisc Authors.
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

#ifndef POPDISC_ERRORS_H_
#define POPDISC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace popdisc {

// Bad user input: malformed files, inconsistent metadata, invalid options.
// The CLI maps it to exit code 2; every other exception is internal (3).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Statistics requested on data that cannot support them (zero variance,
// too few observations).
class DegenerateDataError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace popdisc

#endif  // POPDISC_ERRORS_H_
