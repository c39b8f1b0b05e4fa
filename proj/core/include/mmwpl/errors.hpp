// SPDX-License-Identifier: Apache-2.0
//
// mmwpl - indoor mmWave path loss model fitting library
// Copyright (C) 2026 The mmwpl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MMWPL_ERRORS_HPP
#define MMWPL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmwpl
{

// Every library failure is an mmwpl::Error carrying a coarse class and a
// short machine-readable code, e.g. ("numerical", "singular-design").
enum class ErrorClass
{
    domain,    // argument outside a formula's domain (d < 1 m, f <= 0)
    data,      // malformed or inconsistent input data
    numerical  // singular or degenerate estimation problem
};

std::string_view to_string(ErrorClass c);

class Error : public std::runtime_error
{
  public:
    Error(ErrorClass cls, std::string code, const std::string &message)
        : std::runtime_error(message), cls_(cls), code_(std::move(code))
    {
    }

    ErrorClass error_class() const noexcept { return cls_; }
    const std::string &code() const noexcept { return code_; }

  private:
    ErrorClass cls_;
    std::string code_;
};

class DomainError : public Error
{
  public:
    DomainError(std::string code, const std::string &message)
        : Error(ErrorClass::domain, std::move(code), message)
    {
    }
};

class DataError : public Error
{
  public:
    DataError(std::string code, const std::string &message)
        : Error(ErrorClass::data, std::move(code), message)
    {
    }
};

class NumericalError : public Error
{
  public:
    NumericalError(std::string code, const std::string &message)
        : Error(ErrorClass::numerical, std::move(code), message)
    {
    }
};

} // namespace mmwpl

#endif
