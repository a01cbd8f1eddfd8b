#ifndef Z4LCD_CYCLOTOMIC_HPP
#define Z4LCD_CYCLOTOMIC_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z4lcd/z4poly.hpp"

namespace z4lcd {

// ---------------------------------------------------------------- number theory

std::uint64_t euler_phi(std::uint64_t n);
/// Least k >= 1 with 2^k = 1 (mod n); 1 for n = 1. Throws for even n.
std::uint64_t mult_order_of_2(std::uint64_t n);
/// Positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

enum class PairKind { good, bad };

std::string_view to_string(PairKind kind) noexcept;

/// Classification of (n, 2): good when n divides 2^k + 1 for some k >= 1.
struct PairClass {
    std::uint64_t n = 1;
    std::uint64_t order2 = 1;
    std::uint64_t phi = 1;
    PairKind kind = PairKind::good;
    std::optional<std::uint64_t> gamma;  // phi / order2, good pairs only
    std::optional<std::uint64_t> beta;   // phi / (2 order2), bad pairs only

    friend bool operator==(const PairClass&, const PairClass&) = default;
};

PairClass classify_pair(std::uint64_t n);

// ---------------------------------------------------------------- factorization

using Coset = std::vector<std::uint64_t>;

/// Orbits of s -> 2s mod N, each led by its minimal element, sorted by that element.
std::vector<Coset> cyclotomic_cosets(std::uint64_t N);

/**
 * Monic irreducible factors of X^N + 1 over F2, one per cyclotomic coset and in
 * the same order. Each factor is the minimal polynomial of alpha^s over F2, where
 * alpha has order N in the splitting field built by gf2m::SplittingField.
 */
std::vector<F2Poly> factor_mod2(std::uint64_t N);

/**
 * One Graeffe step from F2 to Z4: with f2(X) = e(X^2) + X o(X^2), returns
 * (-1)^deg(f2) (e(X)^2 - X o(X)^2). For a basic irreducible f2 dividing
 * X^N + 1 this is the monic divisor of X^N - 1 over Z4 reducing to f2.
 */
Z4Poly graeffe_lift(const F2Poly& f2);

// ---------------------------------------------------------------- factor table

using FactorId = std::size_t;

enum class FactorKind { self_reciprocal, pair_first, pair_second };

std::string_view to_string(FactorKind kind) noexcept;

struct FactorRecord {
    FactorId id = 0;
    Z4Poly poly;
    std::uint64_t n = 1;  // divisor of N whose block holds this factor
    std::size_t i = 1;    // 1-based index within the n-block; a pair shares one i
    FactorKind kind = FactorKind::self_reciprocal;
    FactorId partner = 0;
    Coset coset;

    /// "g[i,n]", "f[i,n]" or "f*[i,n]".
    std::string label() const;
    std::size_t degree() const noexcept { return coset.size(); }
};

/// The complete decomposition of X^N - 1 into monic basic irreducibles over Z4.
class FactorTable {
   public:
    FactorTable(std::uint64_t N, std::vector<FactorRecord> records);

    std::uint64_t N() const noexcept { return N_; }
    const std::vector<FactorRecord>& records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }
    const FactorRecord& at(FactorId id) const { return records_.at(id); }

    /// Reciprocal-closed atoms: each self-reciprocal factor alone, each pair together.
    std::vector<std::vector<FactorId>> atoms() const;
    std::size_t pair_count() const noexcept;

   private:
    std::uint64_t N_;
    std::vector<FactorRecord> records_;
};

/**
 * Lifts every mod-2 factor of X^N + 1 and tags it with its divisor block,
 * kind and reciprocal partner. Records are ordered by minimal coset
 * representative; within a reciprocal pair the record with the smaller
 * representative is f[i,n] and its partner is f*[i,n].
 */
FactorTable build_factor_table(std::uint64_t N);

inline std::shared_ptr<const FactorTable> make_factor_table(std::uint64_t N) {
    return std::make_shared<const FactorTable>(build_factor_table(N));
}

/// Throws std::invalid_argument unless N is odd and positive.
void require_odd_length(std::uint64_t N);

}  // namespace z4lcd

#endif  // Z4LCD_CYCLOTOMIC_HPP
