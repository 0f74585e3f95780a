#pragma once

#include <complex>
#include <vector>

namespace fockseq {

// Uniform-grid complex samples on an interval.  Between nodes the value is
// linearly interpolated; outside the range the nearest endpoint value is
// held.
struct SampledFunction {
    double origin = 0.0;
    double step = 1.0;
    std::vector<std::complex<double>> samples;

    double x_end() const {
        return samples.empty() ? origin
                               : origin + step * static_cast<double>(samples.size() - 1);
    }

    std::complex<double> eval(double x) const {
        if (samples.empty()) return {};
        if (x <= origin) return samples.front();
        double t = (x - origin) / step;
        auto i = static_cast<std::size_t>(t);
        if (i + 1 >= samples.size()) return samples.back();
        double w = t - static_cast<double>(i);
        return samples[i] + w * (samples[i + 1] - samples[i]);
    }
};

} // namespace fockseq
