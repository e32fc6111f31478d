#ifndef TURBO_SPECTRUM_HPP
#define TURBO_SPECTRUM_HPP

#include <cstdint>
#include <vector>

#include "turbo/turbo_code.hpp"

namespace turbo {

struct SpectrumTerm {
    int weight = 0;
    std::uint64_t multiplicity = 0;        // number of codewords of this weight
    std::uint64_t information_weight = 0;  // total Hamming weight of their inputs
};

struct DistanceSpectrum {
    std::vector<SpectrumTerm> terms;  // strictly increasing weight
    int certified_up_to = 0;          // all codewords of weight <= this are enumerated
    // One input support (positions of 1s) per recorded codeword, grouped per
    // term; filled only when SpectrumOptions::witness_cap > 0.
    std::vector<std::vector<std::vector<std::uint32_t>>> witnesses;
};

// A zero-state excursion of one constituent encoder: the input offsets of its
// 1s (first at offset 0) and the punctured parity weight it contributes,
// which depends on the slot parity the event starts at.
struct SimpleEvent {
    std::vector<std::uint16_t> ones;
    int span = 0;
    int par_even_start = 0;
    int par_odd_start = 0;
    int end_state = 0;      // nonzero only for terminal (non-remerging) paths
    bool terminal = false;

    int input_weight() const { return static_cast<int>(ones.size()); }
};

enum class SlotClass { All, Even, Odd };  // which parity slots survive puncturing

// Complete list of zero-to-zero excursions whose punctured parity weight
// (minimized over the start slot parity) is <= parity_weight_cap. The input
// weight cap is required: parity weight alone does not bound the search
// (inputs divisible by the feedback polynomial can add weight while the
// parity stays flat). Terminal prefixes are appended when requested.
std::vector<SimpleEvent> enumerate_simple_events(const RscSpec& spec, int parity_weight_cap,
                                                 SlotClass survivors, int input_weight_cap = 16,
                                                 bool include_terminal = false);

struct SpectrumOptions {
    int d_max = 14;
    int input_weight_cap = 14;  // W_max; certification stops at min(d_max, W_max)
    int term_count = 0;         // 0 = every certified term
    bool only_first_term = false;  // tighten the search cap to the best weight found
    std::size_t witness_cap = 0;   // record up to this many inputs per weight
    std::size_t max_events = 4'000'000;  // enumeration guard, explicit failure beyond
};

// Certified branch-and-bound: composes encoder-1 excursions (plus at most one
// truncated tail-end path) under the bound input weight + encoder-1 punctured
// parity <= d_max, and evaluates encoder 2 exactly on the interleaved support.
// Complete up to min(d_max, W_max) because the systematic bits are never
// punctured, so codeword weight bounds input weight.
DistanceSpectrum compute_spectrum(const TurboCodeConfig& cfg, const SpectrumOptions& opts);

// Exhaustive oracle over all 2^N - 1 nonzero inputs; N <= 20.
DistanceSpectrum brute_force_spectrum(const TurboCodeConfig& cfg, int d_max);

struct FreeDistanceStats {
    int d_free = 0;
    std::uint64_t n_free = 0;
    std::uint64_t w_free = 0;
};

// First spectrum term with an adaptive weight cap: starts at initial_d_max
// and grows until a certified first term exists.
FreeDistanceStats free_distance_stats(const TurboCodeConfig& cfg, int initial_d_max = 10);

}  // namespace turbo

#endif
