#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace relnet {

// One keyed block of Philox 4x32-10 (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key);

// Counter-based stream: (seed, stream) fixes the whole sequence, so
// independent substreams can be handed out per trial index and consumed
// under any parallel schedule with reproducible results. Streams are
// cheap value types with no shared state.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  double next_double();       // uniform on [0, 1)
  double next_double_open();  // uniform on (0, 1]

  // Circularly symmetric complex Gaussian, unit total variance
  // (real and imaginary parts each N(0, 1/2)).
  std::complex<double> next_cnormal();

 private:
  void fill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 4> ctr_;  // [0..1] stream id, [2..3] block index
  std::array<std::uint32_t, 4> block_{};
  int used_ = 4;
};

}  // namespace relnet
