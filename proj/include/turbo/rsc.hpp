#ifndef TURBO_RSC_HPP
#define TURBO_RSC_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "turbo/gf2.hpp"

namespace turbo {

// Recursive systematic convolutional constituent code. The shift register
// holds the m most recent recursion bits, bit 0 being the newest. The
// feedback polynomial must be monic with constant term 1 (recursiveness),
// the feedforward degree must not exceed the memory.
struct RscSpec {
    Gf2Poly feedback;
    Gf2Poly feedforward;
    int memory = 0;

    RscSpec(Gf2Poly fb, Gf2Poly ff);

    int num_states() const { return 1 << memory; }
    int cycle_len() const { return cycle_length(feedback); }
};

// LTE constituent code: feedback 1+D^2+D^3 ("15"), feedforward 1+D+D^3 ("13").
RscSpec lte_rsc();
// Berrou constituent code: feedback 1+D+D^2+D^3+D^4 ("37"), feedforward 1+D^4 ("21").
RscSpec berrou_rsc();

struct TrellisStep {
    int state;
    int input;
    int next_state;
    int parity;
};

// One encoder step. Throws on out-of-range state.
TrellisStep rsc_step(const RscSpec& spec, int state, int input);

// Recursion bit that a tail step must feed as input to drive the register
// toward zero (input = feedback cancels the recursion).
int rsc_feedback_bit(const RscSpec& spec, int state);

// Total parity Hamming weight of running `input` from state 0. With
// `terminate`, the m feedback-cancelling tail steps are appended and their
// parity counted too.
int parity_weight_of_input(const RscSpec& spec, std::span<const std::uint8_t> input, bool terminate);

// Flat transition tables for the hot loops: next[2*s+u], parity[2*s+u].
struct RscTables {
    int num_states;
    std::vector<std::uint16_t> next;
    std::vector<std::uint8_t> parity;
    std::vector<std::uint8_t> feedback;  // per state

    explicit RscTables(const RscSpec& spec);
};

}  // namespace turbo

#endif
