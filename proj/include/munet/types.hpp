#ifndef MUNET_TYPES_HPP
#define MUNET_TYPES_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace munet {

// Mono time-domain signal.
struct Waveform {
    std::vector<double> samples;
    int sample_rate = 0;

    std::int64_t length() const { return static_cast<std::int64_t>(samples.size()); }
    double duration_seconds() const {
        return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
    }
};

// Dense row-major matrix, rows = frequency bins, cols = frames.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    Mat() = default;
    Mat(int r, int c, double fill = 0.0) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, fill) {}

    double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t numel() const { return static_cast<std::int64_t>(rows) * cols; }
    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

// Analysis geometry shared by complex and magnitude spectrograms.
struct FrameMeta {
    int window_size = 0;
    int hop = 0;
    int sample_rate = 0;
    bool center_padded = true;

    bool operator==(const FrameMeta&) const = default;
};

struct ComplexSpectrogram {
    int bins = 0;   // window_size / 2 + 1
    int frames = 0;
    FrameMeta meta;
    std::vector<std::complex<double>> data; // row-major bins x frames

    std::complex<double>& at(int b, int t) { return data[static_cast<std::size_t>(b) * frames + t]; }
    std::complex<double> at(int b, int t) const { return data[static_cast<std::size_t>(b) * frames + t]; }
};

struct MagnitudeSpectrogram {
    Mat values;     // bins x frames, nonnegative
    FrameMeta meta;

    int bins() const { return values.rows; }
    int frames() const { return values.cols; }
};

} // namespace munet

#endif
