/*
 * Copyright 2026 The sapzf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sapzf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is a byte offset (graph6) or line number (files).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// An input exceeds a configured size cap.
class CapError : public Error {
public:
    CapError(const std::string& operation, long long size, long long cap)
        : Error(operation + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
          operation_(operation)
    {
    }
    const std::string& operation() const { return operation_; }

private:
    std::string operation_;
};

/// A precondition that guards mathematical validity (e.g. M(G) unknown at this size).
class GuardError : public Error {
public:
    using Error::Error;
};

/// A matrix entry contradicts the zero pattern of its graph.
class PatternError : public Error {
public:
    PatternError(const std::string& what, int row, int col)
        : Error(what + " at entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")"),
          row_(row), col_(col)
    {
    }
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// No case of the xi decision procedure applied.
class UnresolvedError : public Error {
public:
    using Error::Error;
};

} // namespace sapzf
