#ifndef TURBO_INTERLEAVER_HPP
#define TURBO_INTERLEAVER_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace turbo {

enum class InterleaverFamily { Random, RandomOddEven, HighSpread, HighSpreadOddEven, Block, File, Custom };

std::string family_name(InterleaverFamily f);

// A bijection on {0..N-1}. table()[i] = pi(i) is the output position of the
// bit that enters at position i. Bijectivity is checked on construction.
class Permutation {
public:
    Permutation(std::vector<std::uint32_t> table, InterleaverFamily family);

    std::size_t size() const { return table_.size(); }
    std::uint32_t operator()(std::size_t i) const { return table_[i]; }
    const std::vector<std::uint32_t>& table() const { return table_; }
    const std::vector<std::uint32_t>& inverse() const { return inverse_; }

    InterleaverFamily family() const { return family_; }
    std::uint64_t seed = 0;
    int spread_param = 0;  // S for the high-spread families
    int rows = 0, cols = 0;  // block family

private:
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
    InterleaverFamily family_;
};

// Uniform permutation, Fisher-Yates over a seeded PRNG.
Permutation gen_random(std::size_t n, std::uint64_t seed);

// Permutation with pi(i) = i (mod 2) for all i: the odd and the even position
// classes are shuffled independently and uniformly.
Permutation gen_random_oddeven(std::size_t n, std::uint64_t seed);

struct HsrBudget {
    int max_restarts = 10000;
};

// Randomized sequential fill with exact feasibility checking; restarts from
// scratch on a dead end. Guarantees spread(result) > s. Throws
// std::runtime_error when the restart budget is exhausted and
// std::invalid_argument for s beyond the feasibility ceiling.
Permutation gen_hsr(std::size_t n, int s, std::uint64_t seed, HsrBudget budget = {});

// As gen_hsr with candidate images restricted to the parity class of the
// source index.
Permutation gen_hsr_oddeven(std::size_t n, int s, std::uint64_t seed, HsrBudget budget = {});

// Ceiling used by the high-spread generators to reject hopeless requests.
int hsr_spread_ceiling(std::size_t n);

// Writes row-wise into an R x C array, reads column-wise:
// pi(r*C + c) = c*R + r.
Permutation gen_block(int rows, int cols);

bool is_odd_even(const Permutation& p);

struct SpreadReport {
    int spread;       // min over i != j of |i-j| + |pi(i)-pi(j)|
    std::size_t witness_i, witness_j;
};

SpreadReport spread(const Permutation& p);

// Tally of weight-2 input pairs whose 1s sit a multiple of `cycle_len` apart.
// counts[(din, dout)] only tracks output distances that are again multiples
// of cycle_len; total_pairs[din] counts all pairs at input distance din.
struct PairingCensus {
    int cycle_len;
    std::map<std::pair<int, int>, std::uint64_t> counts;
    std::map<int, std::uint64_t> total_pairs;

    // P(|pi(i)-pi(j)| == din) among pairs with j-i == din.
    double preservation_probability(int din) const;

    PairingCensus& operator+=(const PairingCensus& other);
};

PairingCensus weight2_pairing_census(const Permutation& p, int cycle_len, int max_input_distance);

enum class PuncturePhase { P1AtEvenIndex, P1AtOddIndex };

std::string phase_name(PuncturePhase phase);

// Per-position count of surviving parity bits under alternate puncturing:
// parity 1 of position i survives when i matches the phase, parity 2 at
// output slot pi(i) survives on the complementary slot parity.
struct UepCoverage {
    std::vector<std::uint8_t> per_position;  // values in {0,1,2}
    std::array<std::uint64_t, 3> histogram() const;
};

UepCoverage uep_coverage(const Permutation& p, PuncturePhase phase);

// Interchange file format: line 1 is N, then pi(0..N-1) one value per line.
void save_interleaver(const Permutation& p, std::ostream& out);
void save_interleaver(const Permutation& p, const std::string& path);
Permutation load_interleaver(std::istream& in);
Permutation load_interleaver(const std::string& path);

}  // namespace turbo

#endif
