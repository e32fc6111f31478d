#include "turbo/interleaver.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace turbo {

std::string family_name(InterleaverFamily f) {
    switch (f) {
        case InterleaverFamily::Random: return "random";
        case InterleaverFamily::RandomOddEven: return "random-oe";
        case InterleaverFamily::HighSpread: return "hsr";
        case InterleaverFamily::HighSpreadOddEven: return "hsr-oe";
        case InterleaverFamily::Block: return "block";
        case InterleaverFamily::File: return "file";
        case InterleaverFamily::Custom: return "custom";
    }
    return "?";
}

std::string phase_name(PuncturePhase phase) {
    return phase == PuncturePhase::P1AtEvenIndex ? "even" : "odd";
}

Permutation::Permutation(std::vector<std::uint32_t> table, InterleaverFamily family)
    : table_(std::move(table)), family_(family) {
    const std::size_t n = table_.size();
    if (n < 2) throw std::invalid_argument("Permutation: length must be >= 2");
    inverse_.assign(n, UINT32_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t v = table_[i];
        if (v >= n || inverse_[v] != UINT32_MAX)
            throw std::invalid_argument("Permutation: table is not a bijection on {0..N-1}");
        inverse_[v] = static_cast<std::uint32_t>(i);
    }
}

Permutation gen_random(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_random: N must be >= 2");
    std::vector<std::uint32_t> table(n);
    std::iota(table.begin(), table.end(), 0u);
    std::mt19937_64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i);
        std::swap(table[i], table[pick(rng)]);
    }
    Permutation p(std::move(table), InterleaverFamily::Random);
    p.seed = seed;
    return p;
}

Permutation gen_random_oddeven(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("gen_random_oddeven: N must be >= 2");
    // Shuffling each parity class in place realizes the accept/reject
    // construction's distribution: images are drawn uniformly from the
    // shrinking same-parity pool.
    std::vector<std::uint32_t> even, odd;
    for (std::size_t i = 0; i < n; ++i) (i % 2 == 0 ? even : odd).push_back(static_cast<std::uint32_t>(i));
    std::mt19937_64 rng(seed);
    auto shuffle_class = [&rng](std::vector<std::uint32_t>& cls) {
        for (std::size_t i = cls.size() - 1; i > 0; --i) {
            std::uniform_int_distribution<std::size_t> pick(0, i);
            std::swap(cls[i], cls[pick(rng)]);
        }
    };
    shuffle_class(even);
    shuffle_class(odd);
    std::vector<std::uint32_t> table(n);
    for (std::size_t i = 0; i < n; ++i) table[i] = (i % 2 == 0) ? even[i / 2] : odd[i / 2];
    Permutation p(std::move(table), InterleaverFamily::RandomOddEven);
    p.seed = seed;
    return p;
}

int hsr_spread_ceiling(std::size_t n) {
    // Achievable spread tops out near sqrt(2N); the slack keeps small-N
    // requests on the budget path instead of rejecting them outright.
    return static_cast<int>(std::ceil(std::sqrt(2.0 * static_cast<double>(n)))) + 4;
}

namespace {

Permutation gen_hsr_impl(std::size_t n, int s, std::uint64_t seed, HsrBudget budget, bool odd_even) {
    if (n < 2) throw std::invalid_argument("gen_hsr: N must be >= 2");
    if (s < 1) throw std::invalid_argument("gen_hsr: S must be >= 1");
    if (s > hsr_spread_ceiling(n))
        throw std::invalid_argument("gen_hsr: S=" + std::to_string(s) + " is above the feasibility ceiling " +
                                    std::to_string(hsr_spread_ceiling(n)) + " for N=" + std::to_string(n));

    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> table(n);
    std::vector<std::uint32_t> pool, feasible;
    pool.reserve(n);
    feasible.reserve(n);

    for (int attempt = 0; attempt < budget.max_restarts; ++attempt) {
        pool.clear();
        for (std::size_t v = 0; v < n; ++v) pool.push_back(static_cast<std::uint32_t>(v));
        bool dead_end = false;
        for (std::size_t i = 0; i < n && !dead_end; ++i) {
            feasible.clear();
            for (std::uint32_t v : pool) {
                if (odd_even && (v % 2) != (i % 2)) continue;
                bool ok = true;
                const std::size_t j_lo = (static_cast<int>(i) - s + 1 > 0) ? i - static_cast<std::size_t>(s) + 1 : 0;
                for (std::size_t j = j_lo; j < i; ++j) {
                    const int dij = static_cast<int>(i - j);
                    const int dpi = std::abs(static_cast<int>(v) - static_cast<int>(table[j]));
                    if (dpi <= s - dij) { ok = false; break; }
                }
                if (ok) feasible.push_back(v);
            }
            if (feasible.empty()) {
                dead_end = true;
                break;
            }
            std::uniform_int_distribution<std::size_t> pick(0, feasible.size() - 1);
            const std::uint32_t v = feasible[pick(rng)];
            table[i] = v;
            pool.erase(std::find(pool.begin(), pool.end(), v));
        }
        if (!dead_end) {
            Permutation p(std::vector<std::uint32_t>(table),
                          odd_even ? InterleaverFamily::HighSpreadOddEven : InterleaverFamily::HighSpread);
            p.seed = seed;
            p.spread_param = s;
            return p;
        }
    }
    throw std::runtime_error("gen_hsr: restart budget exhausted (N=" + std::to_string(n) +
                             ", S=" + std::to_string(s) + ", restarts=" + std::to_string(budget.max_restarts) + ")");
}

}  // namespace

Permutation gen_hsr(std::size_t n, int s, std::uint64_t seed, HsrBudget budget) {
    return gen_hsr_impl(n, s, seed, budget, false);
}

Permutation gen_hsr_oddeven(std::size_t n, int s, std::uint64_t seed, HsrBudget budget) {
    return gen_hsr_impl(n, s, seed, budget, true);
}

Permutation gen_block(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("gen_block: rows and cols must be >= 1");
    const std::size_t n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    std::vector<std::uint32_t> table(n);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            table[static_cast<std::size_t>(r) * cols + c] = static_cast<std::uint32_t>(c * rows + r);
    Permutation p(std::move(table), InterleaverFamily::Block);
    p.rows = rows;
    p.cols = cols;
    return p;
}

bool is_odd_even(const Permutation& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if ((p(i) & 1u) != (i & 1u)) return false;
    return true;
}

SpreadReport spread(const Permutation& p) {
    const std::size_t n = p.size();
    SpreadReport report{static_cast<int>(2 * n), 0, 0};
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n && static_cast<int>(j - i) < report.spread; ++j) {
            const int sum = static_cast<int>(j - i) +
                            std::abs(static_cast<int>(p(i)) - static_cast<int>(p(j)));
            if (sum < report.spread) {
                report.spread = sum;
                report.witness_i = i;
                report.witness_j = j;
            }
        }
    }
    return report;
}

double PairingCensus::preservation_probability(int din) const {
    auto tot = total_pairs.find(din);
    if (tot == total_pairs.end() || tot->second == 0) return 0.0;
    auto hit = counts.find({din, din});
    return hit == counts.end() ? 0.0 : static_cast<double>(hit->second) / static_cast<double>(tot->second);
}

PairingCensus& PairingCensus::operator+=(const PairingCensus& other) {
    if (cycle_len != other.cycle_len) throw std::invalid_argument("census merge: cycle length mismatch");
    for (const auto& [key, v] : other.counts) counts[key] += v;
    for (const auto& [key, v] : other.total_pairs) total_pairs[key] += v;
    return *this;
}

PairingCensus weight2_pairing_census(const Permutation& p, int cycle_len, int max_input_distance) {
    if (cycle_len < 1) throw std::invalid_argument("weight2_pairing_census: cycle length must be >= 1");
    PairingCensus census;
    census.cycle_len = cycle_len;
    const std::size_t n = p.size();
    for (int din = cycle_len; din <= max_input_distance; din += cycle_len) {
        if (static_cast<std::size_t>(din) >= n) break;
        for (std::size_t i = 0; i + din < n; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(din);
            census.total_pairs[din] += 1;
            const int dout = std::abs(static_cast<int>(p(i)) - static_cast<int>(p(j)));
            if (dout % cycle_len == 0) census.counts[{din, dout}] += 1;
        }
    }
    return census;
}

std::array<std::uint64_t, 3> UepCoverage::histogram() const {
    std::array<std::uint64_t, 3> h{0, 0, 0};
    for (std::uint8_t c : per_position) h[c] += 1;
    return h;
}

UepCoverage uep_coverage(const Permutation& p, PuncturePhase phase) {
    const unsigned p1_parity = (phase == PuncturePhase::P1AtEvenIndex) ? 0u : 1u;
    UepCoverage cov;
    cov.per_position.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const std::uint8_t own = (i % 2 == p1_parity) ? 1 : 0;
        const std::uint8_t image = (p(i) % 2 != p1_parity) ? 1 : 0;
        cov.per_position[i] = static_cast<std::uint8_t>(own + image);
    }
    return cov;
}

void save_interleaver(const Permutation& p, std::ostream& out) {
    out << p.size() << '\n';
    for (std::size_t i = 0; i < p.size(); ++i) out << p(i) << '\n';
}

void save_interleaver(const Permutation& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open interleaver file for writing: " + path);
    save_interleaver(p, out);
}

Permutation load_interleaver(std::istream& in) {
    std::size_t n = 0;
    if (!(in >> n)) throw std::runtime_error("interleaver file: missing length line");
    std::vector<std::uint32_t> table(n);
    for (std::size_t i = 0; i < n; ++i)
        if (!(in >> table[i]))
            throw std::runtime_error("interleaver file: truncated at entry " + std::to_string(i));
    return Permutation(std::move(table), InterleaverFamily::File);
}

Permutation load_interleaver(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open interleaver file: " + path);
    return load_interleaver(in);
}

}  // namespace turbo
