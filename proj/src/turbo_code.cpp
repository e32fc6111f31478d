#include "turbo/turbo_code.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace turbo {

std::string termination_name(Termination t) {
    switch (t) {
        case Termination::None: return "none";
        case Termination::FirstOnly: return "first";
        case Termination::BothLteStyle: return "both";
    }
    return "?";
}

std::size_t TurboCodeConfig::transmitted_length() const {
    const std::size_t n = frame_length();
    const std::size_t m = static_cast<std::size_t>(constituent.memory);
    switch (termination) {
        case Termination::None: return 2 * n;
        case Termination::FirstOnly: return 2 * n + 2 * m;
        case Termination::BothLteStyle: return 2 * n + 4 * m;
    }
    return 2 * n;
}

int CodewordFrame::total_weight() const {
    auto w = [](const std::vector<std::uint8_t>& v) {
        return std::accumulate(v.begin(), v.end(), 0, [](int acc, std::uint8_t b) { return acc + (b & 1); });
    };
    return w(systematic) + w(parity) + w(tail1_systematic) + w(tail1_parity) + w(tail2_systematic) +
           w(tail2_parity);
}

std::size_t CodewordFrame::transmitted_size() const {
    return systematic.size() + parity.size() + tail1_systematic.size() + tail1_parity.size() +
           tail2_systematic.size() + tail2_parity.size();
}

std::vector<std::uint8_t> CodewordFrame::transmitted_bits() const {
    std::vector<std::uint8_t> out;
    out.reserve(transmitted_size());
    for (const auto* part : {&systematic, &parity, &tail1_systematic, &tail1_parity, &tail2_systematic,
                             &tail2_parity})
        out.insert(out.end(), part->begin(), part->end());
    return out;
}

namespace {

struct EncoderRun {
    std::vector<std::uint8_t> parity;
    std::vector<std::uint8_t> tail_systematic, tail_parity;
};

EncoderRun run_constituent(const RscSpec& spec, std::span<const std::uint8_t> input, bool terminate) {
    EncoderRun run;
    run.parity.resize(input.size());
    int state = 0;
    for (std::size_t t = 0; t < input.size(); ++t) {
        auto step = rsc_step(spec, state, input[t]);
        run.parity[t] = static_cast<std::uint8_t>(step.parity);
        state = step.next_state;
    }
    if (terminate) {
        run.tail_systematic.resize(static_cast<std::size_t>(spec.memory));
        run.tail_parity.resize(static_cast<std::size_t>(spec.memory));
        for (int i = 0; i < spec.memory; ++i) {
            const int u = rsc_feedback_bit(spec, state);
            auto step = rsc_step(spec, state, u);
            run.tail_systematic[i] = static_cast<std::uint8_t>(u);
            run.tail_parity[i] = static_cast<std::uint8_t>(step.parity);
            state = step.next_state;
        }
    }
    return run;
}

}  // namespace

CodewordFrame turbo_encode(const TurboCodeConfig& cfg, std::span<const std::uint8_t> info) {
    const std::size_t n = cfg.frame_length();
    if (info.size() != n) throw std::invalid_argument("turbo_encode: info length != interleaver length");

    std::vector<std::uint8_t> interleaved(n);
    for (std::size_t i = 0; i < n; ++i) interleaved[cfg.interleaver(i)] = info[i] & 1;

    const bool term1 = cfg.termination != Termination::None;
    const bool term2 = cfg.termination == Termination::BothLteStyle;
    EncoderRun enc1 = run_constituent(cfg.constituent, info, term1);
    EncoderRun enc2 = run_constituent(cfg.constituent, interleaved, term2);

    CodewordFrame frame;
    frame.systematic.assign(info.begin(), info.end());
    for (auto& b : frame.systematic) b &= 1;
    frame.parity.resize(n);
    for (std::size_t t = 0; t < n; ++t)
        frame.parity[t] = cfg.parity1_survives(t) ? enc1.parity[t] : enc2.parity[t];
    frame.tail1_systematic = std::move(enc1.tail_systematic);
    frame.tail1_parity = std::move(enc1.tail_parity);
    frame.tail2_systematic = std::move(enc2.tail_systematic);
    frame.tail2_parity = std::move(enc2.tail_parity);
    return frame;
}

LlrFrame depuncture(const TurboCodeConfig& cfg, std::span<const double> channel_llrs) {
    const std::size_t n = cfg.frame_length();
    if (channel_llrs.size() != cfg.transmitted_length())
        throw std::invalid_argument("depuncture: stream length mismatch");
    LlrFrame f;
    f.systematic.assign(channel_llrs.begin(), channel_llrs.begin() + n);
    f.parity1.assign(n, 0.0);
    f.parity2.assign(n, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
        const double v = channel_llrs[n + t];
        (cfg.parity1_survives(t) ? f.parity1[t] : f.parity2[t]) = v;
    }
    std::size_t pos = 2 * n;
    const std::size_t m = static_cast<std::size_t>(cfg.constituent.memory);
    auto take = [&](std::vector<double>& dst) {
        dst.assign(channel_llrs.begin() + pos, channel_llrs.begin() + pos + m);
        pos += m;
    };
    if (cfg.termination != Termination::None) {
        take(f.tail1_systematic);
        take(f.tail1_parity);
    }
    if (cfg.termination == Termination::BothLteStyle) {
        take(f.tail2_systematic);
        take(f.tail2_parity);
    }
    return f;
}

namespace {

inline double max_star(double a, double b, bool max_log) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b);
    return max_log ? hi : hi + std::log1p(std::exp(-std::abs(a - b)));
}

}  // namespace

std::vector<double> siso_logmap(const RscSpec& spec,
                                std::span<const double> systematic_llr,
                                std::span<const double> parity_llr,
                                std::span<const double> apriori_llr,
                                bool terminated,
                                std::span<const double> tail_systematic_llr,
                                std::span<const double> tail_parity_llr,
                                bool max_log_approx) {
    const std::size_t n = systematic_llr.size();
    if (parity_llr.size() != n || apriori_llr.size() != n)
        throw std::invalid_argument("siso_logmap: input lengths differ");
    const std::size_t m = static_cast<std::size_t>(spec.memory);
    if (terminated && !tail_systematic_llr.empty() &&
        (tail_systematic_llr.size() != m || tail_parity_llr.size() != m))
        throw std::invalid_argument("siso_logmap: tail LLR spans must have length m");

    const RscTables trellis(spec);
    const int ns = trellis.num_states;
    const std::size_t total = n + (terminated ? m : 0);
    const double ninf = -std::numeric_limits<double>::infinity();

    // Branch metric of (state, input) at step t; tail steps force the
    // feedback-cancelling input.
    auto gamma = [&](std::size_t t, int s, int u) -> double {
        double sys, par, ap = 0.0;
        int p;
        if (t < n) {
            sys = systematic_llr[t];
            par = parity_llr[t];
            ap = apriori_llr[t];
            p = trellis.parity[2 * s + u];
        } else {
            const std::size_t k = t - n;
            sys = tail_systematic_llr.empty() ? 0.0 : tail_systematic_llr[k];
            par = tail_parity_llr.empty() ? 0.0 : tail_parity_llr[k];
            p = trellis.parity[2 * s + u];
        }
        return 0.5 * ((u ? -1.0 : 1.0) * (sys + ap) + (p ? -1.0 : 1.0) * par);
    };

    std::vector<std::vector<double>> alpha(total + 1, std::vector<double>(ns, ninf));
    alpha[0][0] = 0.0;
    for (std::size_t t = 0; t < total; ++t) {
        for (int s = 0; s < ns; ++s) {
            if (alpha[t][s] == ninf) continue;
            const bool tail_step = t >= n;
            for (int u = 0; u < 2; ++u) {
                if (tail_step && u != trellis.feedback[s]) continue;
                const int s2 = trellis.next[2 * s + u];
                alpha[t + 1][s2] = max_star(alpha[t + 1][s2], alpha[t][s] + gamma(t, s, u), max_log_approx);
            }
        }
        const double peak = *std::max_element(alpha[t + 1].begin(), alpha[t + 1].end());
        if (peak != ninf)
            for (double& v : alpha[t + 1]) v -= peak;
    }

    std::vector<std::vector<double>> beta(total + 1, std::vector<double>(ns, ninf));
    if (terminated) {
        beta[total][0] = 0.0;
    } else {
        std::fill(beta[total].begin(), beta[total].end(), 0.0);
    }
    for (std::size_t t = total; t-- > 0;) {
        for (int s = 0; s < ns; ++s) {
            const bool tail_step = t >= n;
            for (int u = 0; u < 2; ++u) {
                if (tail_step && u != trellis.feedback[s]) continue;
                const int s2 = trellis.next[2 * s + u];
                if (beta[t + 1][s2] == ninf) continue;
                beta[t][s] = max_star(beta[t][s], beta[t + 1][s2] + gamma(t, s, u), max_log_approx);
            }
        }
        const double peak = *std::max_element(beta[t].begin(), beta[t].end());
        if (peak != ninf)
            for (double& v : beta[t]) v -= peak;
    }

    std::vector<double> extrinsic(n);
    for (std::size_t t = 0; t < n; ++t) {
        double num = ninf, den = ninf;
        for (int s = 0; s < ns; ++s) {
            if (alpha[t][s] == ninf) continue;
            for (int u = 0; u < 2; ++u) {
                const int s2 = trellis.next[2 * s + u];
                if (beta[t + 1][s2] == ninf) continue;
                const double metric = alpha[t][s] + gamma(t, s, u) + beta[t + 1][s2];
                if (u == 0)
                    num = max_star(num, metric, max_log_approx);
                else
                    den = max_star(den, metric, max_log_approx);
            }
        }
        const double total_llr = num - den;
        extrinsic[t] = total_llr - systematic_llr[t] - apriori_llr[t];
    }
    return extrinsic;
}

DecodeResult turbo_decode(const TurboCodeConfig& cfg, const LlrFrame& llr, int iterations) {
    const std::size_t n = cfg.frame_length();
    const std::size_t m = static_cast<std::size_t>(cfg.constituent.memory);
    if (iterations < 1) throw std::invalid_argument("turbo_decode: iterations must be >= 1");
    if (llr.systematic.size() != n || llr.parity1.size() != n || llr.parity2.size() != n)
        throw std::invalid_argument("turbo_decode: LLR frame shape mismatch");
    const bool term1 = cfg.termination != Termination::None;
    const bool term2 = cfg.termination == Termination::BothLteStyle;
    if (term1 && !llr.tail1_systematic.empty() &&
        (llr.tail1_systematic.size() != m || llr.tail1_parity.size() != m))
        throw std::invalid_argument("turbo_decode: tail1 LLR shape mismatch");
    if (term2 && !llr.tail2_systematic.empty() &&
        (llr.tail2_systematic.size() != m || llr.tail2_parity.size() != m))
        throw std::invalid_argument("turbo_decode: tail2 LLR shape mismatch");

    const auto& pi = cfg.interleaver;
    std::vector<double> sys2(n);
    for (std::size_t i = 0; i < n; ++i) sys2[pi(i)] = llr.systematic[i];

    std::vector<double> apriori1(n, 0.0), apriori2(n, 0.0), ext1(n), ext2(n);
    for (int it = 0; it < iterations; ++it) {
        ext1 = siso_logmap(cfg.constituent, llr.systematic, llr.parity1, apriori1, term1,
                           llr.tail1_systematic, llr.tail1_parity);
        for (std::size_t i = 0; i < n; ++i) apriori2[pi(i)] = ext1[i];
        ext2 = siso_logmap(cfg.constituent, sys2, llr.parity2, apriori2, term2,
                           llr.tail2_systematic, llr.tail2_parity);
        for (std::size_t i = 0; i < n; ++i) apriori1[i] = ext2[pi(i)];
    }

    DecodeResult result;
    result.posterior.resize(n);
    result.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double post = llr.systematic[i] + ext1[i] + ext2[pi(i)];
        result.posterior[i] = post;
        result.bits[i] = post < 0.0 ? 1 : 0;  // ties decode to 0
    }
    return result;
}

}  // namespace turbo
