#include "z4lcd/codes.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace z4lcd {

// ---------------------------------------------------------------- DivisorSet

DivisorSet::DivisorSet(TablePtr table, std::vector<FactorId> members) : table_(std::move(table)), members_(std::move(members)) {
    if (!table_) throw std::invalid_argument("DivisorSet: null factor table");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= table_->size())
        throw std::invalid_argument("DivisorSet: unknown factor id " + std::to_string(members_.back()));
}

DivisorSet DivisorSet::all(TablePtr table) {
    if (!table) throw std::invalid_argument("DivisorSet: null factor table");
    std::vector<FactorId> ids(table->size());
    for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = k;
    return DivisorSet(std::move(table), std::move(ids));
}

bool DivisorSet::contains(FactorId id) const noexcept { return std::binary_search(members_.begin(), members_.end(), id); }

std::size_t DivisorSet::degree() const {
    std::size_t d = 0;
    for (auto id : members_) d += table_->at(id).degree();
    return d;
}

void DivisorSet::require_same_table(const DivisorSet& other) const {
    if (table_ != other.table_) throw std::invalid_argument("DivisorSet: operands refer to different factor tables");
}

DivisorSet DivisorSet::operator|(const DivisorSet& other) const {
    require_same_table(other);
    std::vector<FactorId> out;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(), std::back_inserter(out));
    return DivisorSet(table_, std::move(out));
}

DivisorSet DivisorSet::operator&(const DivisorSet& other) const {
    require_same_table(other);
    std::vector<FactorId> out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                          std::back_inserter(out));
    return DivisorSet(table_, std::move(out));
}

DivisorSet DivisorSet::complement() const {
    std::vector<FactorId> out;
    for (FactorId id = 0; id < table_->size(); ++id)
        if (!contains(id)) out.push_back(id);
    return DivisorSet(table_, std::move(out));
}

Z4Poly divisor_poly(const DivisorSet& d) {
    Z4Poly p = Z4Poly::one();
    for (auto id : d.members()) p = p * d.table()->at(id).poly;
    return p;
}

DivisorSet reciprocal_set(const DivisorSet& d) {
    std::vector<FactorId> out;
    out.reserve(d.size());
    for (auto id : d.members()) out.push_back(d.table()->at(id).partner);
    return DivisorSet(d.table(), std::move(out));
}

DivisorSet factor_divisor(const Z4Poly& p, const TablePtr& table) {
    if (!table) throw std::invalid_argument("factor_divisor: null factor table");
    if (!p.is_monic()) throw std::invalid_argument("factor_divisor: polynomial must be monic");
    Z4Poly residual = p;
    std::vector<FactorId> members;
    for (const auto& r : table->records()) {
        if (residual.degree() < r.poly.degree()) continue;
        auto [q, rem] = divmod_monic(residual, r.poly);
        if (!rem.is_zero()) continue;
        members.push_back(r.id);
        residual = std::move(q);
    }
    if (residual != Z4Poly::one())
        throw std::invalid_argument("polynomial " + to_symbolic(p) + " is not a monic divisor of X^" +
                                    std::to_string(table->N()) + "-1");
    return DivisorSet(table, std::move(members));
}

// ---------------------------------------------------------------- CodeSpec

CodeSpec::CodeSpec(DivisorSet f, DivisorSet g, DivisorSet h) : f_(std::move(f)), g_(std::move(g)), h_(std::move(h)) {
    if (f_.table() != g_.table() || f_.table() != h_.table())
        throw std::invalid_argument("CodeSpec: f, g, h must share one factor table");
    if (!(f_ & g_).is_empty() || !(f_ & h_).is_empty() || !(g_ & h_).is_empty())
        throw std::invalid_argument("CodeSpec: f, g, h must be pairwise disjoint");
    if (f_.size() + g_.size() + h_.size() != f_.table()->size())
        throw std::invalid_argument("CodeSpec: f, g, h must cover every factor of X^N-1");
}

CodeSpec CodeSpec::from_fg(DivisorSet f, DivisorSet g) {
    if (!(f & g).is_empty()) throw std::invalid_argument("CodeSpec: f and g overlap");
    auto h = (f | g).complement();
    return CodeSpec(std::move(f), std::move(g), std::move(h));
}

CodeSpec CodeSpec::reciprocal() const { return CodeSpec(reciprocal_set(f_), reciprocal_set(g_), reciprocal_set(h_)); }

std::vector<CodeSpec> all_partitions(const TablePtr& table) {
    const std::size_t k = table->size();
    if (k > 20) throw std::length_error("all_partitions: 3^" + std::to_string(k) + " partitions is too many to list");
    std::size_t total = 1;
    for (std::size_t j = 0; j < k; ++j) total *= 3;

    std::vector<CodeSpec> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<FactorId> parts[3];
        std::size_t rest = code;
        for (FactorId id = 0; id < k; ++id, rest /= 3) parts[rest % 3].push_back(id);
        out.emplace_back(DivisorSet(table, std::move(parts[0])), DivisorSet(table, std::move(parts[1])),
                         DivisorSet(table, std::move(parts[2])));
    }
    return out;
}

// ---------------------------------------------------------------- hull

HullReport hull_report(const CodeSpec& c) {
    auto H = c.h() & reciprocal_set(c.f());
    auto lcm_set = c.f() | reciprocal_set(c.h());
    auto G = (H | lcm_set).complement();

    HullReport r{H, G};
    r.degH = H.degree();
    r.degG = G.degree();
    r.hullSize = BigCount(1) << (2 * r.degH + r.degG);
    r.lcd = r.hullSize == 1;
    return r;
}

BigCount code_size(const CodeSpec& c) { return BigCount(1) << (2 * c.h().degree() + c.g().degree()); }

bool is_lcd(const CodeSpec& c) { return hull_report(c).lcd; }

bool has_self_reciprocal_generator(const CodeSpec& c) { return c.g().is_empty() && reciprocal_set(c.f()) == c.f(); }

}  // namespace z4lcd
