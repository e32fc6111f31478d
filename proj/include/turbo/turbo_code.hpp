#ifndef TURBO_TURBO_CODE_HPP
#define TURBO_TURBO_CODE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "turbo/interleaver.hpp"
#include "turbo/rsc.hpp"

namespace turbo {

enum class Termination { None, FirstOnly, BothLteStyle };

std::string termination_name(Termination t);

// Parallel concatenation of two identical RSC encoders, systematic stream
// plus alternately punctured parities for a nominal rate of 1/2. The second
// encoder runs on the interleaved frame: its input at time k is
// info[pi^-1(k)]. Under P1AtEvenIndex, parity 1 survives at even slots and
// parity 2 at odd slots (and conversely for P1AtOddIndex). Tail bits of
// terminated encoders are transmitted unpunctured.
struct TurboCodeConfig {
    RscSpec constituent;
    Permutation interleaver;
    PuncturePhase phase = PuncturePhase::P1AtEvenIndex;
    Termination termination = Termination::BothLteStyle;

    static constexpr double rate = 0.5;  // nominal

    std::size_t frame_length() const { return interleaver.size(); }
    bool parity1_survives(std::size_t slot) const {
        return (slot % 2 == 0) == (phase == PuncturePhase::P1AtEvenIndex);
    }
    std::size_t transmitted_length() const;
};

struct CodewordFrame {
    std::vector<std::uint8_t> systematic;  // N info bits
    std::vector<std::uint8_t> parity;      // N slots, parity 1 or 2 per the phase
    std::vector<std::uint8_t> tail1_systematic, tail1_parity;  // m each when encoder 1 is terminated
    std::vector<std::uint8_t> tail2_systematic, tail2_parity;  // m each when encoder 2 is terminated

    int total_weight() const;
    std::size_t transmitted_size() const;
    // Transmission order: systematic, parity, tail1 sys, tail1 par, tail2 sys, tail2 par.
    std::vector<std::uint8_t> transmitted_bits() const;
};

CodewordFrame turbo_encode(const TurboCodeConfig& cfg, std::span<const std::uint8_t> info);

// Channel LLRs arranged for the decoder; LLR > 0 favors bit 0. Punctured
// parity slots must hold exactly 0.
struct LlrFrame {
    std::vector<double> systematic;
    std::vector<double> parity1, parity2;  // length N, zeros where punctured
    std::vector<double> tail1_systematic, tail1_parity;
    std::vector<double> tail2_systematic, tail2_parity;
};

// Splits a received stream (in transmitted_bits() order) back into an
// LlrFrame, zeroing the punctured slots.
LlrFrame depuncture(const TurboCodeConfig& cfg, std::span<const double> channel_llrs);

struct DecodeResult {
    std::vector<std::uint8_t> bits;
    std::vector<double> posterior;
};

// Iterative two-SISO exchange with exact log-MAP constituents; a posterior of
// exactly 0 decodes to bit 0.
DecodeResult turbo_decode(const TurboCodeConfig& cfg, const LlrFrame& llr, int iterations);

// Extrinsic LLRs of one constituent via the forward/backward recursion in the
// log domain (max*(a,b) = max(a,b) + log1p(exp(-|a-b|)), or plain max when
// `max_log_approx` is set). A terminated trellis follows the m
// feedback-cancelling tail steps (tail LLR spans may be empty when the tail
// was not observed); an unterminated one weights all final states equally.
std::vector<double> siso_logmap(const RscSpec& spec,
                                std::span<const double> systematic_llr,
                                std::span<const double> parity_llr,
                                std::span<const double> apriori_llr,
                                bool terminated,
                                std::span<const double> tail_systematic_llr = {},
                                std::span<const double> tail_parity_llr = {},
                                bool max_log_approx = false);

}  // namespace turbo

#endif
