#ifndef Z4LCD_GF2M_HPP
#define Z4LCD_GF2M_HPP

#include <cstdint>
#include <vector>

namespace z4lcd::gf2m {

// Polynomials over F2 packed into a machine word: bit k is the coefficient of X^k.
using Bits = std::uint64_t;

/// Largest extension degree supported by SplittingField.
inline constexpr unsigned kMaxDegree = 48;

int degree(Bits p) noexcept;
Bits mulmod(Bits a, Bits b, Bits modulus) noexcept;
Bits mod(Bits a, Bits modulus) noexcept;
Bits gcd(Bits a, Bits b) noexcept;

/// Rabin's test: X^(2^m) = X mod p and gcd(X^(2^(m/q)) - X, p) = 1 for every prime q | m.
bool is_irreducible(Bits p) noexcept;

/// Numerically smallest irreducible polynomial of degree m (m >= 1).
Bits least_irreducible(unsigned m);

/// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/**
 * GF(2^m) = F2[Y]/(p(Y)) with p = least_irreducible(m). Elements are bit
 * masks below 2^m.
 */
class SplittingField {
   public:
    explicit SplittingField(unsigned m);

    unsigned degree() const noexcept { return m_; }
    Bits modulus() const noexcept { return modulus_; }
    std::uint64_t group_order() const noexcept { return (std::uint64_t{1} << m_) - 1; }

    Bits mul(Bits a, Bits b) const noexcept { return mulmod(a, b, modulus_); }
    Bits pow(Bits a, std::uint64_t e) const noexcept;

    /// Smallest nonzero element (as an integer) generating the multiplicative group.
    Bits least_primitive() const;
    /// least_primitive()^((2^m - 1)/n); requires n | 2^m - 1.
    Bits element_of_order(std::uint64_t n) const;

   private:
    unsigned m_;
    Bits modulus_;
};

}  // namespace z4lcd::gf2m

#endif  // Z4LCD_GF2M_HPP
