// Copyright 2026 The Wikinames Authors
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

#ifndef WIKINAMES_ERRORS_HPP_
#define WIKINAMES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace wikinames {

// Base for all pipeline errors. The CLI maps the subclasses to exit codes:
// ConfigError -> 1, DataError -> 2, IoError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration, bad flags, or a missing prerequisite artifact
// (e.g. extract requested before the closure was computed).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Input data that violates the expected format beyond the skip-and-count
// tolerance (e.g. a dump whose compression header is unrecognized).
class DataError : public Error {
 public:
  using Error::Error;
};

// Filesystem and storage failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wikinames

#endif  // WIKINAMES_ERRORS_HPP_
