#ifndef TURBO_CHANNEL_HPP
#define TURBO_CHANNEL_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace turbo {

// BPSK over AWGN: bit b maps to symbol 1-2b, noise variance follows from
// Eb/N0 and the code rate for unit-energy symbols.
struct ChannelSpec {
    double ebn0_db = 0.0;
    double rate = 0.5;
    std::uint64_t seed = 0;

    double noise_variance() const;  // sigma^2 = 1 / (2 R 10^(EbN0/10))
};

// y = (1-2b) + n with n iid Gaussian(0, sigma^2); one sample per bit in
// order, deterministic for a fixed seed.
std::vector<double> transmit(const ChannelSpec& spec, std::span<const std::uint8_t> bits);

// LLR = 2y/sigma^2, positive favors bit 0. Throws on nonpositive variance.
std::vector<double> llr(const ChannelSpec& spec, std::span<const double> samples);

}  // namespace turbo

#endif
