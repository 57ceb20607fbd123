#ifndef MUNET_WAV_IO_HPP
#define MUNET_WAV_IO_HPP

#include <string>

#include "munet/types.hpp"

namespace munet {

// Reads a RIFF/WAVE file with PCM16, PCM24 or float32 samples, 1 or 2
// channels. Stereo is downmixed to mono by per-sample channel mean and
// integer formats are scaled to [-1, 1].
Waveform load_audio(const std::string& path);

// Writes a mono float32 WAV. Samples outside [-1, 1] are written unchanged
// (float container, no clipping) with a warning on stderr.
void write_audio(const Waveform& w, const std::string& path);

} // namespace munet

#endif
