#include "turbo/channel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace turbo {

double ChannelSpec::noise_variance() const {
    return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0));
}

std::vector<double> transmit(const ChannelSpec& spec, std::span<const std::uint8_t> bits) {
    const double sigma = std::sqrt(spec.noise_variance());
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        out[i] = (bits[i] & 1 ? -1.0 : 1.0) + sigma * gauss(rng);
    return out;
}

std::vector<double> llr(const ChannelSpec& spec, std::span<const double> samples) {
    const double var = spec.noise_variance();
    if (!(var > 0.0)) throw std::invalid_argument("llr: noise variance must be positive");
    const double scale = 2.0 / var;
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) out[i] = scale * samples[i];
    return out;
}

}  // namespace turbo
