#ifndef Z4LCD_CODES_HPP
#define Z4LCD_CODES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "z4lcd/cyclotomic.hpp"
#include "z4lcd/z4poly.hpp"

namespace z4lcd {

/// Exact counts such as 4^N overflow machine words quickly.
using BigCount = boost::multiprecision::cpp_int;

using TablePtr = std::shared_ptr<const FactorTable>;

/**
 * A monic divisor of X^N - 1 given by the ids of its irreducible factors.
 * Members are kept sorted and unique; the empty set stands for 1.
 */
class DivisorSet {
   public:
    /// Throws std::invalid_argument for a null table or an id outside it.
    DivisorSet(TablePtr table, std::vector<FactorId> members);
    static DivisorSet empty(TablePtr table) { return DivisorSet(std::move(table), {}); }
    static DivisorSet all(TablePtr table);

    const TablePtr& table() const noexcept { return table_; }
    std::span<const FactorId> members() const noexcept { return members_; }
    bool contains(FactorId id) const noexcept;
    bool is_empty() const noexcept { return members_.empty(); }
    std::size_t size() const noexcept { return members_.size(); }
    /// Sum of member degrees.
    std::size_t degree() const;

    DivisorSet operator|(const DivisorSet& other) const;
    DivisorSet operator&(const DivisorSet& other) const;
    DivisorSet complement() const;

    /// Same table (by identity) and same members.
    friend bool operator==(const DivisorSet& a, const DivisorSet& b) noexcept {
        return a.table_ == b.table_ && a.members_ == b.members_;
    }

   private:
    void require_same_table(const DivisorSet& other) const;

    TablePtr table_;
    std::vector<FactorId> members_;
};

Z4Poly divisor_poly(const DivisorSet& d);
/// Partner ids of every member; its polynomial is the reciprocal of d's.
DivisorSet reciprocal_set(const DivisorSet& d);
/// Trial division by every table factor. Throws std::invalid_argument unless p is a monic divisor of X^N - 1.
DivisorSet factor_divisor(const Z4Poly& p, const TablePtr& table);

/// A cyclic code C = (f g, 2 f) with f g h = X^N - 1.
class CodeSpec {
   public:
    /// Throws std::invalid_argument unless f, g, h partition the table.
    CodeSpec(DivisorSet f, DivisorSet g, DivisorSet h);
    /// h is the complement of f and g.
    static CodeSpec from_fg(DivisorSet f, DivisorSet g);

    const TablePtr& table() const noexcept { return f_.table(); }
    std::uint64_t N() const noexcept { return table()->N(); }
    const DivisorSet& f() const noexcept { return f_; }
    const DivisorSet& g() const noexcept { return g_; }
    const DivisorSet& h() const noexcept { return h_; }

    /// The same code with every part replaced by its reciprocal set.
    CodeSpec reciprocal() const;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;

   private:
    DivisorSet f_, g_, h_;
};

/// Every (f, g, h) partition of the table, enumerated in base-3 order of the record ids.
std::vector<CodeSpec> all_partitions(const TablePtr& table);

struct HullReport {
    DivisorSet H;  // gcd(h, f*)
    DivisorSet G;  // (X^N - 1) / (H lcm(f, h*))
    std::size_t degH = 0;
    std::size_t degG = 0;
    BigCount hullSize = 1;
    bool lcd = true;
};

/**
 * Hull cardinality 4^deg(H) 2^deg(G). gcd and lcm are taken on factor sets,
 * which is exact because the table factors are pairwise coprime.
 */
HullReport hull_report(const CodeSpec& c);

/// 4^deg(h) 2^deg(g).
BigCount code_size(const CodeSpec& c);

bool is_lcd(const CodeSpec& c);

/// g = 1 and f self-reciprocal, read off the factor sets.
bool has_self_reciprocal_generator(const CodeSpec& c);

}  // namespace z4lcd

#endif  // Z4LCD_CODES_HPP
