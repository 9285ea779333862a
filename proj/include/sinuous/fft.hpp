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

#ifndef SINUOUS_FFT_HPP
#define SINUOUS_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sinuous
{
    // Complex-to-complex DFT of fixed length backed by FFTW. Plans are built
    // with FFTW_ESTIMATE so results are reproducible run to run.
    //   forward: X[k] = sum_n x[n] exp(-2 pi i k n / N)
    //   inverse: x[n] = sum_k X[k] exp(+2 pi i k n / N)   (no 1/N)
    class FftPlan
    {
    public:
        explicit FftPlan(std::size_t n);
        ~FftPlan();

        FftPlan(const FftPlan &) = delete;
        FftPlan &operator=(const FftPlan &) = delete;
        FftPlan(FftPlan &&other) noexcept;
        FftPlan &operator=(FftPlan &&other) noexcept;

        std::size_t size() const { return n_; }

        void forward(std::span<std::complex<double>> data);
        void inverse(std::span<std::complex<double>> data);

    private:
        void execute(void *plan, std::span<std::complex<double>> data);
        void release() noexcept;

        std::size_t n_ = 0;
        std::complex<double> *buffer_ = nullptr;
        void *forward_ = nullptr;
        void *inverse_ = nullptr;
    };
}

#endif
