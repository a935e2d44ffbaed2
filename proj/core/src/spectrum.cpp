// Copyright 2026 The owqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "owqc/nmr/spectrum.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include <fftw3.h>

namespace owqc::nmr {
namespace {

// The FFTW planner is not thread safe.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

std::vector<cplx> forward_fft(const std::vector<cplx>& input) {
    const int n = static_cast<int>(input.size());
    std::vector<cplx> in = input;
    std::vector<cplx> out(input.size());
    auto* in_ptr = reinterpret_cast<fftw_complex*>(in.data());
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan = nullptr;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, in_ptr, out_ptr, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    if (plan == nullptr) throw std::runtime_error("synthesize_spectrum: FFTW planning failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

std::string_view to_string(ReferencePhase phase) {
    switch (phase) {
        case ReferencePhase::thermal_pi2_y_positive: return "thermal_pi2_y_positive";
    }
    return "unknown";
}

std::vector<cplx> free_induction_decay(const EnsembleState& state, const MoleculeSpec& spec, int observe,
                                       const SpectrumOptions& options) {
    const int n = state.num_qubits();
    if (spec.num_spins() != n) throw std::invalid_argument("synthesize_spectrum: spin count does not match the state");
    if (observe < 1 || observe > n) throw std::out_of_range("synthesize_spectrum: observe qubit out of range");
    if (!(options.duration_s > 0.0)) throw std::invalid_argument("synthesize_spectrum: duration must be positive");
    if (options.samples < 256 || !std::has_single_bit(options.samples)) {
        throw std::invalid_argument("synthesize_spectrum: samples must be a power of two >= 256");
    }
    const std::vector<double> energy = h0_diagonal(spec);
    const std::size_t bit = std::size_t{1} << (n - observe);

    // Single-quantum coherences of the observed spin: rho(x, x') with x' = x
    // minus the observed bit; each rotates at (E_x' - E_x).
    std::vector<cplx> weight;
    std::vector<double> rate;
    for (std::size_t x = 0; x < dim_of(n); ++x) {
        if ((x & bit) == 0) continue;
        const cplx w = 2.0 * state.rho(x, x ^ bit);
        if (w == cplx{0.0}) continue;
        weight.push_back(w);
        rate.push_back(energy[x ^ bit] - energy[x]);
    }
    const double t2 = spec.t2(observe);
    const double dwell = options.duration_s / static_cast<double>(options.samples);
    std::vector<cplx> fid(options.samples, cplx{0.0});
    for (std::size_t m = 0; m < options.samples; ++m) {
        const double t = dwell * static_cast<double>(m);
        cplx s{0.0};
        for (std::size_t i = 0; i < weight.size(); ++i) s += weight[i] * std::polar(1.0, rate[i] * t);
        if (options.apply_t2 && std::isfinite(t2)) s *= std::exp(-t / t2);
        fid[m] = s;
    }
    return fid;
}

SpectrumData synthesize_spectrum(const EnsembleState& state, const MoleculeSpec& spec, int observe,
                                 const SpectrumOptions& options) {
    std::vector<cplx> fid = free_induction_decay(state, spec, observe, options);
    fid[0] *= 0.5;
    const std::vector<cplx> raw = forward_fft(fid);

    const std::size_t n = options.samples;
    const double dwell = options.duration_s / static_cast<double>(n);
    SpectrumData data;
    data.observe_qubit = observe;
    data.duration_s = options.duration_s;
    data.samples = n;
    data.frequencies_hz.resize(n);
    data.amplitudes.resize(n);
    // Reorder so that bin i sits at (i - n/2) / duration.
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = (i + n / 2) % n;
        data.frequencies_hz[i] = (static_cast<double>(i) - static_cast<double>(n / 2)) / options.duration_s;
        data.amplitudes[i] = raw[src] * dwell;
    }
    return data;
}

std::vector<SpectralLine> find_lines(const SpectrumData& data, double rel_threshold) {
    std::vector<SpectralLine> lines;
    const std::size_t n = data.amplitudes.size();
    double peak = 0.0;
    for (const cplx& a : data.amplitudes) peak = std::max(peak, std::abs(a.real()));
    if (peak == 0.0 || n < 3) return lines;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double here = std::abs(data.amplitudes[i].real());
        if (here < rel_threshold * peak) continue;
        if (here > std::abs(data.amplitudes[i - 1].real()) && here >= std::abs(data.amplitudes[i + 1].real())) {
            lines.push_back({data.frequencies_hz[i], data.amplitudes[i].real()});
        }
    }
    return lines;
}

}  // namespace owqc::nmr
