#include "turbo/rsc.hpp"

#include <bit>
#include <stdexcept>

namespace turbo {

RscSpec::RscSpec(Gf2Poly fb, Gf2Poly ff) : feedback(fb), feedforward(ff), memory(fb.degree()) {
    if (!fb.constant_term() || fb.degree() < 1)
        throw std::invalid_argument("RscSpec: feedback must have constant term 1 and degree >= 1");
    if (ff.degree() > memory)
        throw std::invalid_argument("RscSpec: feedforward degree exceeds memory");
}

RscSpec lte_rsc() { return RscSpec(Gf2Poly::from_octal("15"), Gf2Poly::from_octal("13")); }
RscSpec berrou_rsc() { return RscSpec(Gf2Poly::from_octal("37"), Gf2Poly::from_octal("21")); }

static int parity_of(std::uint32_t x) { return std::popcount(x) & 1; }

TrellisStep rsc_step(const RscSpec& spec, int state, int input) {
    if (state < 0 || state >= spec.num_states())
        throw std::out_of_range("rsc_step: state out of range");
    const int fb = parity_of(static_cast<std::uint32_t>(state) & (spec.feedback.mask() >> 1));
    const int d = (input ^ fb) & 1;
    const std::uint32_t reg = (static_cast<std::uint32_t>(state) << 1) | static_cast<std::uint32_t>(d);
    const int parity = parity_of(reg & spec.feedforward.mask());
    const int next = static_cast<int>(reg) & (spec.num_states() - 1);
    return TrellisStep{state, input & 1, next, parity};
}

int rsc_feedback_bit(const RscSpec& spec, int state) {
    return parity_of(static_cast<std::uint32_t>(state) & (spec.feedback.mask() >> 1));
}

int parity_weight_of_input(const RscSpec& spec, std::span<const std::uint8_t> input, bool terminate) {
    int state = 0;
    int weight = 0;
    for (std::uint8_t u : input) {
        auto step = rsc_step(spec, state, u);
        weight += step.parity;
        state = step.next_state;
    }
    if (terminate) {
        for (int i = 0; i < spec.memory; ++i) {
            auto step = rsc_step(spec, state, rsc_feedback_bit(spec, state));
            weight += step.parity;
            state = step.next_state;
        }
    }
    return weight;
}

RscTables::RscTables(const RscSpec& spec) : num_states(spec.num_states()) {
    next.resize(static_cast<std::size_t>(num_states) * 2);
    parity.resize(static_cast<std::size_t>(num_states) * 2);
    feedback.resize(static_cast<std::size_t>(num_states));
    for (int s = 0; s < num_states; ++s) {
        feedback[s] = static_cast<std::uint8_t>(rsc_feedback_bit(spec, s));
        for (int u = 0; u < 2; ++u) {
            auto step = rsc_step(spec, s, u);
            next[2 * s + u] = static_cast<std::uint16_t>(step.next_state);
            parity[2 * s + u] = static_cast<std::uint8_t>(step.parity);
        }
    }
}

}  // namespace turbo
