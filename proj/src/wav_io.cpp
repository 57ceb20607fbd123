#include "munet/wav_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iostream>
#include <vector>

#include "munet/common.hpp"

static_assert(std::endian::native == std::endian::little, "WAV I/O assumes a little-endian host");

namespace munet {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xfffe;

std::uint32_t read_u32(const unsigned char* p) {
    std::uint32_t x;
    std::memcpy(&x, p, 4);
    return x;
}

std::uint16_t read_u16(const unsigned char* p) {
    std::uint16_t x;
    std::memcpy(&x, p, 2);
    return x;
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t x) {
    const auto n = out.size();
    out.resize(n + 4);
    std::memcpy(out.data() + n, &x, 4);
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t x) {
    const auto n = out.size();
    out.resize(n + 2);
    std::memcpy(out.data() + n, &x, 2);
}

} // namespace

Waveform load_audio(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot open audio file: " + path);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    if (bytes.size() < 44 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
        throw DataError("not a RIFF/WAVE file: " + path);

    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t sample_rate = 0;
    const unsigned char* data = nullptr;
    std::size_t data_len = 0;
    bool have_fmt = false, have_data = false;

    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const char* id = reinterpret_cast<const char*>(bytes.data() + pos);
        const std::uint32_t len = read_u32(bytes.data() + pos + 4);
        const std::size_t body = pos + 8;
        if (body + len > bytes.size()) throw DataError("truncated chunk in " + path);
        if (std::memcmp(id, "fmt ", 4) == 0) {
            if (len < 16) throw DataError("malformed fmt chunk in " + path);
            format = read_u16(bytes.data() + body);
            channels = read_u16(bytes.data() + body + 2);
            sample_rate = read_u32(bytes.data() + body + 4);
            bits = read_u16(bytes.data() + body + 14);
            if (format == kFormatExtensible && len >= 40)
                format = read_u16(bytes.data() + body + 24); // subformat GUID leads with the tag
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            data = bytes.data() + body;
            data_len = len;
            have_data = true;
        }
        pos = body + len + (len & 1); // chunks are word-aligned
    }

    if (!have_fmt || !have_data) throw DataError("missing fmt/data chunk in " + path);
    if (channels != 1 && channels != 2)
        throw DataError("unsupported channel count " + std::to_string(channels) + " in " + path);
    if (sample_rate == 0) throw DataError("zero sample rate in " + path);

    int bytes_per_sample;
    if (format == kFormatPcm && bits == 16) bytes_per_sample = 2;
    else if (format == kFormatPcm && bits == 24) bytes_per_sample = 3;
    else if (format == kFormatFloat && bits == 32) bytes_per_sample = 4;
    else
        throw DataError("unsupported encoding (format " + std::to_string(format) + ", " +
                        std::to_string(bits) + " bit) in " + path);

    const std::size_t frame_bytes = static_cast<std::size_t>(bytes_per_sample) * channels;
    const std::size_t frames = data_len / frame_bytes;
    if (frames == 0) throw DataError("zero-length stream in " + path);

    Waveform w;
    w.sample_rate = static_cast<int>(sample_rate);
    w.samples.resize(frames);

    auto decode = [&](const unsigned char* p) -> double {
        switch (bytes_per_sample) {
            case 2: {
                std::int16_t s;
                std::memcpy(&s, p, 2);
                return static_cast<double>(s) / 32768.0;
            }
            case 3: {
                std::int32_t s = (p[0] << 8) | (p[1] << 16) | (static_cast<std::int32_t>(p[2]) << 24);
                return static_cast<double>(s >> 8) / 8388608.0;
            }
            default: {
                float s;
                std::memcpy(&s, p, 4);
                return static_cast<double>(s);
            }
        }
    };

    for (std::size_t i = 0; i < frames; ++i) {
        const unsigned char* p = data + i * frame_bytes;
        double x = decode(p);
        if (channels == 2) x = 0.5 * (x + decode(p + bytes_per_sample));
        if (!std::isfinite(x)) throw DataError("non-finite sample in " + path);
        w.samples[i] = x;
    }
    return w;
}

void write_audio(const Waveform& w, const std::string& path) {
    std::size_t out_of_range = 0;
    for (double x : w.samples) {
        if (!std::isfinite(x)) throw DataError("non-finite sample while writing " + path);
        if (x < -1.0 || x > 1.0) ++out_of_range;
    }
    if (out_of_range > 0)
        std::cerr << "warning: " << out_of_range << " samples outside [-1,1] written unclipped to "
                  << path << "\n";

    const std::uint32_t n = static_cast<std::uint32_t>(w.samples.size());
    const std::uint32_t data_bytes = n * 4;
    const std::uint32_t rate = static_cast<std::uint32_t>(w.sample_rate);

    std::vector<unsigned char> out;
    out.reserve(58 + data_bytes);
    auto put_tag = [&](const char* tag) { out.insert(out.end(), tag, tag + 4); };

    put_tag("RIFF");
    put_u32(out, 4 + 8 + 16 + 8 + data_bytes);
    put_tag("WAVE");
    put_tag("fmt ");
    put_u32(out, 16);
    put_u16(out, kFormatFloat);
    put_u16(out, 1);
    put_u32(out, rate);
    put_u32(out, rate * 4);
    put_u16(out, 4);
    put_u16(out, 32);
    put_tag("data");
    put_u32(out, data_bytes);
    const auto payload = out.size();
    out.resize(payload + data_bytes);
    for (std::uint32_t i = 0; i < n; ++i) {
        const float s = static_cast<float>(w.samples[i]);
        std::memcpy(out.data() + payload + i * 4, &s, 4);
    }

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw DataError("cannot open for writing: " + path);
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f) throw DataError("write failed: " + path);
}

} // namespace munet
