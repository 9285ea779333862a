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

#include "sinuous/fft.hpp"
#include "sinuous/error.hpp"

#include <algorithm>
#include <fftw3.h>
#include <mutex>
#include <utility>

namespace sinuous
{
    namespace
    {
        // FFTW's planner is not thread-safe; execution is.
        std::mutex &planner_mutex()
        {
            static std::mutex m;
            return m;
        }
    }

    FftPlan::FftPlan(std::size_t n) : n_(n)
    {
        detail::require(n >= 1, "FFT length must be positive");
        std::lock_guard<std::mutex> lock(planner_mutex());
        buffer_ = reinterpret_cast<std::complex<double> *>(fftw_malloc(sizeof(fftw_complex) * n));
        if (buffer_ == nullptr)
            throw std::bad_alloc();
        auto *buf = reinterpret_cast<fftw_complex *>(buffer_);
        const int len = static_cast<int>(n);
        forward_ = fftw_plan_dft_1d(len, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
        inverse_ = fftw_plan_dft_1d(len, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (forward_ == nullptr || inverse_ == nullptr)
        {
            release();
            throw NumericError("FFTW could not create a plan");
        }
    }

    FftPlan::~FftPlan()
    {
        release();
    }

    FftPlan::FftPlan(FftPlan &&other) noexcept
        : n_(std::exchange(other.n_, 0)), buffer_(std::exchange(other.buffer_, nullptr)),
          forward_(std::exchange(other.forward_, nullptr)), inverse_(std::exchange(other.inverse_, nullptr))
    {
    }

    FftPlan &FftPlan::operator=(FftPlan &&other) noexcept
    {
        if (this != &other)
        {
            release();
            n_ = std::exchange(other.n_, 0);
            buffer_ = std::exchange(other.buffer_, nullptr);
            forward_ = std::exchange(other.forward_, nullptr);
            inverse_ = std::exchange(other.inverse_, nullptr);
        }
        return *this;
    }

    void FftPlan::release() noexcept
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        if (forward_)
            fftw_destroy_plan(static_cast<fftw_plan>(forward_));
        if (inverse_)
            fftw_destroy_plan(static_cast<fftw_plan>(inverse_));
        if (buffer_)
            fftw_free(buffer_);
        forward_ = inverse_ = nullptr;
        buffer_ = nullptr;
    }

    void FftPlan::execute(void *plan, std::span<std::complex<double>> data)
    {
        detail::require(data.size() == n_, "FFT input length does not match the plan");
        std::copy(data.begin(), data.end(), buffer_);
        fftw_execute(static_cast<fftw_plan>(plan));
        std::copy(buffer_, buffer_ + n_, data.begin());
    }

    void FftPlan::forward(std::span<std::complex<double>> data)
    {
        execute(forward_, data);
    }

    void FftPlan::inverse(std::span<std::complex<double>> data)
    {
        execute(inverse_, data);
    }
}
