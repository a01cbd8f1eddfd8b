#ifndef Z4LCD_ORACLE_HPP
#define Z4LCD_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "z4lcd/codes.hpp"

namespace z4lcd::oracle {

// Ground truth by exhaustion over Z4^N. Shares no code path with hull_report
// beyond expanding the generators f g and 2 f into vectors.

inline constexpr std::uint64_t kDefaultBound = 9;
/// Largest N accepted even with an explicit override.
inline constexpr std::uint64_t kMaxBound = 13;

class BoundExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Codeword {
    std::vector<std::uint8_t> entries;
    friend bool operator==(const Codeword&, const Codeword&) = default;
};

/**
 * Vector in Z4^N split into bit planes: entry k is lo_k + 2 hi_k.
 * Keys order words by (hi, lo).
 */
struct PackedWord {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;

    std::uint64_t key() const noexcept { return lo | (std::uint64_t{hi} << 32); }
    static PackedWord from_key(std::uint64_t k) noexcept {
        return {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
    }
    friend bool operator==(const PackedWord&, const PackedWord&) = default;
};

PackedWord pack(const Codeword& w);
Codeword unpack(PackedWord w, std::uint64_t N);
PackedWord add(PackedWord a, PackedWord b) noexcept;
/// Multiplication by x in Z4[X]/(X^N - 1).
PackedWord shift(PackedWord w, std::uint64_t N) noexcept;
/// Standard dot product mod 4.
unsigned inner_product(PackedWord a, PackedWord b) noexcept;

/// Coefficient vector of p mod X^N - 1.
Codeword to_codeword(const Z4Poly& p, std::uint64_t N);

/// A set of codewords plus a spanning set used when computing its dual.
class CodeSet {
   public:
    CodeSet(std::uint64_t N, std::vector<std::uint64_t> keys, std::vector<PackedWord> spanning);

    std::uint64_t N() const noexcept { return N_; }
    std::size_t size() const noexcept { return keys_.size(); }
    bool contains(PackedWord w) const noexcept;
    const std::vector<std::uint64_t>& keys() const noexcept { return keys_; }
    const std::vector<PackedWord>& spanning() const noexcept { return spanning_; }
    std::vector<Codeword> words() const;
    bool is_subset_of(const CodeSet& other) const;

    friend bool operator==(const CodeSet& a, const CodeSet& b) noexcept { return a.N_ == b.N_ && a.keys_ == b.keys_; }

   private:
    std::uint64_t N_;
    std::vector<std::uint64_t> keys_;  // sorted, unique
    std::vector<PackedWord> spanning_;
};

enum class Traversal { breadth_first, depth_first };

/// Throws BoundExceeded when N > bound, std::invalid_argument when bound > kMaxBound.
void require_within_bound(std::uint64_t N, std::uint64_t bound);

/// Closure of {f g, 2 f} under addition and cyclic shift, by work-list iteration.
CodeSet expand_code(const CodeSpec& c, std::uint64_t bound = kDefaultBound, Traversal order = Traversal::breadth_first);
/// Closure of arbitrary generators in Z4^N.
CodeSet span(std::uint64_t N, const std::vector<Codeword>& generators, std::uint64_t bound = kDefaultBound,
             Traversal order = Traversal::breadth_first);

/// Scans all of Z4^N for vectors orthogonal to the spanning set of c.
CodeSet dual_bruteforce(const CodeSet& c, std::uint64_t bound = kDefaultBound);

/// |C intersect C-perp|.
std::uint64_t hull_bruteforce(const CodeSpec& c, std::uint64_t bound = kDefaultBound);

struct Mismatch {
    CodeSpec spec;
    std::string check;  // "hullSize", "codeSize" or "lcdCriterion"
    std::string expected;
    std::string got;
};

struct SweepReport {
    std::uint64_t N = 1;
    std::size_t partitions = 0;
    std::size_t lcdCount = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const noexcept { return mismatches.empty(); }
};

/**
 * For every (f, g, h) partition: brute-force hull size against hull_report,
 * brute-force code size against code_size, and is_lcd against the
 * self-reciprocal-generator criterion. "expected" is the brute-force side.
 */
SweepReport sweep_verify(std::uint64_t N, std::uint64_t bound = kDefaultBound);

}  // namespace z4lcd::oracle

#endif  // Z4LCD_ORACLE_HPP
