#include "z4lcd/lcdenum.hpp"

#include <algorithm>
#include <stdexcept>

namespace z4lcd {

std::size_t count_nsrf(std::uint64_t N) {
    require_odd_length(N);
    std::size_t nsrf = 0;
    for (auto n : divisors(N)) {
        const auto pc = classify_pair(n);
        nsrf += pc.kind == PairKind::good ? *pc.gamma : *pc.beta;
    }
    return nsrf;
}

BigCount count_lcd(std::uint64_t N) { return BigCount(1) << count_nsrf(N); }

std::string generator_label(const DivisorSet& f) {
    if (f.is_empty()) return "(1)";
    if (f.size() == f.table()->size()) return "(0)";
    std::string out = "(";
    for (auto id : f.members()) out += f.table()->at(id).label();
    return out + ")";
}

LcdCatalog enumerate_lcd(const TablePtr& table) {
    const auto atoms = table->atoms();
    if (atoms.size() > kMaxCatalogAtoms)
        throw std::length_error("enumerate_lcd: 2^" + std::to_string(atoms.size()) + " LCD codes is too many to list");

    LcdCatalog cat;
    cat.N = table->N();
    cat.nsrf = atoms.size();
    const std::size_t total = std::size_t{1} << atoms.size();
    cat.entries.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<FactorId> ids;
        for (std::size_t a = 0; a < atoms.size(); ++a)
            if (mask >> a & 1) ids.insert(ids.end(), atoms[a].begin(), atoms[a].end());
        DivisorSet f(table, std::move(ids));
        auto generator = divisor_poly(f);
        auto label = generator_label(f);
        cat.entries.push_back({std::move(f), std::move(generator), std::move(label)});
    }
    std::sort(cat.entries.begin(), cat.entries.end(), [](const LcdEntry& a, const LcdEntry& b) {
        if (a.f.size() != b.f.size()) return a.f.size() < b.f.size();
        return std::lexicographical_compare(a.f.members().begin(), a.f.members().end(), b.f.members().begin(),
                                            b.f.members().end());
    });
    return cat;
}

LcdCatalog enumerate_lcd(std::uint64_t N) { return enumerate_lcd(make_factor_table(N)); }

LcdCensus lcd_census(std::uint64_t N, std::uint64_t sweep_budget) {
    const auto table = make_factor_table(N);
    LcdCensus census;
    census.formulaCount = count_lcd(N);
    census.enumeratedCount = enumerate_lcd(table).entries.size();

    std::uint64_t partitions = 1;
    for (std::size_t k = 0; k < table->size() && partitions <= sweep_budget; ++k) partitions *= 3;
    if (partitions <= sweep_budget) {
        std::uint64_t lcd = 0;
        for (const auto& c : all_partitions(table)) lcd += hull_report(c).lcd;
        census.sweptCount = lcd;
    }
    return census;
}

}  // namespace z4lcd
