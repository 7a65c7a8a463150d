/*
   Copyright 2026 The sternpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace stern {

/// A brute-force or enumeration bound was exceeded. The CLI maps this to exit code 3.
class cap_exceeded : public std::runtime_error {
public:
    cap_exceeded(const std::string& what, long long requested, long long cap)
        : std::runtime_error(what + ": requested " + std::to_string(requested) + ", cap " +
                             std::to_string(cap)),
          requested_(requested),
          cap_(cap) {}

    long long requested() const noexcept { return requested_; }
    long long cap() const noexcept { return cap_; }

private:
    long long requested_;
    long long cap_;
};

/// A closed formula produced a value that its derivation says is impossible
/// (e.g. a non-integer count). Reported instead of rounded.
class formula_discrepancy : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require_cap(const char* what, long long requested, long long cap) {
    if (requested > cap) throw cap_exceeded(what, requested, cap);
}

}  // namespace stern
