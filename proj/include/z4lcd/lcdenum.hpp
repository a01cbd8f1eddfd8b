#ifndef Z4LCD_LCDENUM_HPP
#define Z4LCD_LCDENUM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z4lcd/codes.hpp"

namespace z4lcd {

/// Catalogs beyond 2^kMaxCatalogAtoms entries are refused.
inline constexpr std::size_t kMaxCatalogAtoms = 24;

struct LcdEntry {
    DivisorSet f;
    Z4Poly generator;
    std::string label;  // "(1)", "(g[1,1])", "(f[1,7]f*[1,7])", "(0)"
};

struct LcdCatalog {
    std::uint64_t N = 1;
    std::size_t nsrf = 0;
    std::vector<LcdEntry> entries;
};

/// Sum of gamma(n) over good divisors n of N plus beta(n) over bad ones.
std::size_t count_nsrf(std::uint64_t N);

/// 2^count_nsrf(N).
BigCount count_lcd(std::uint64_t N);

/// Display label of the code (f) in factor-label notation.
std::string generator_label(const DivisorSet& f);

/**
 * Every cyclic LCD code (f) of length N: one entry per union of reciprocal-closed
 * atoms, sorted by atom-union size and then by id list.
 */
LcdCatalog enumerate_lcd(const TablePtr& table);
LcdCatalog enumerate_lcd(std::uint64_t N);

struct LcdCensus {
    BigCount formulaCount;
    BigCount enumeratedCount;
    std::optional<BigCount> sweptCount;  // empty when the partition budget was exceeded
};

/// Default cap on 3^#records for the partition sweep in lcd_census.
inline constexpr std::uint64_t kDefaultSweepBudget = 1'000'000;

/// Counts LCD codes three ways: the closed formula, the catalog, and a hull_report sweep over all partitions.
LcdCensus lcd_census(std::uint64_t N, std::uint64_t sweep_budget = kDefaultSweepBudget);

}  // namespace z4lcd

#endif  // Z4LCD_LCDENUM_HPP
