// Copyright 2026 The QuboForge Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quboforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input data (files, models, assignments).
class DataError : public Error {
 public:
    using Error::Error;
};

/// A file could not be parsed. Carries a 1-based line/column when known.
class ParseError : public DataError {
 public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

 private:
    std::size_t line_;
    std::size_t column_;
};

/// An operation was called with arguments outside its contract.
class InvalidArgument : public Error {
 public:
    using Error::Error;
};

/// A model is provably infeasible before any search happens.
class InfeasibleError : public DataError {
 public:
    using DataError::DataError;
};

/// A requested computation exceeds a configured size guard.
class CapacityError : public Error {
 public:
    CapacityError(const std::string& message, std::uint64_t requested, std::uint64_t limit)
        : Error(message), requested_(requested), limit_(limit) {}

    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t limit() const noexcept { return limit_; }

 private:
    std::uint64_t requested_;
    std::uint64_t limit_;
};

}  // namespace quboforge
