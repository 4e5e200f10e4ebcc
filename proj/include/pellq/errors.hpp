// Copyright 2026 The pellquart Authors
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

#ifndef PELLQ_ERRORS_HPP
#define PELLQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pellq {

/// Mathematically invalid input: division by zero, a perfect-square radicand,
/// a singular curve, a parameter on a vanishing locus.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A truncated Laurent series was asked for a coefficient outside its
/// guaranteed window. Callers re-expand with more terms.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace pellq

#endif  // PELLQ_ERRORS_HPP
