// SPDX-License-Identifier: Apache-2.0
//
// sinuous-disp: dispersion modelling and pulse compression for sinuous antennas
// Copyright (C) 2026 The sinuous-disp Authors
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

#ifndef SINUOUS_ERROR_HPP
#define SINUOUS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sinuous
{
    // Base class for everything the toolkit throws.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A value violates a type invariant or an operation precondition.
    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    // Malformed configuration (unknown key, bad value, missing section).
    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    // Malformed input data, e.g. a CSV file that violates its schema.
    class DataError : public Error
    {
    public:
        using Error::Error;
    };

    // A computation produced a non-finite value.
    class NumericError : public Error
    {
    public:
        using Error::Error;
    };

    namespace detail
    {
        inline void require(bool condition, const std::string &message)
        {
            if (!condition)
                throw InvalidArgument(message);
        }
    }
}

#endif
