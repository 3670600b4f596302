/* Copyright (C) 2026 The maclane authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef MACLANE_ERROR_HPP
#define MACLANE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace maclane {

// Mirrors ml_status in maclane.h; keep the numeric values in sync.
enum class ErrorCode : int {
  InvalidArgument = 1,  // malformed input, rank mismatch, bad flag values
  Parse = 2,            // polynomial / element / JSON grammar errors
  Domain = 3,           // mathematical precondition violated
  Undetermined = 4,     // a horizon was exhausted without a verdict
  Io = 5,
  Internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace maclane

#endif
