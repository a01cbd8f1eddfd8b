#ifndef Z4LCD_Z4POLY_HPP
#define Z4LCD_Z4POLY_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z4lcd {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

class F2Poly;

/**
 * Polynomial over Z4 stored as ascending coefficients in {0,1,2,3}.
 *
 * The representation is always normalized: the last stored coefficient is
 * nonzero, and the zero polynomial has no coefficients at all. Values are
 * immutable once built.
 */
class Z4Poly {
   public:
    Z4Poly() = default;
    /// Any integers are accepted and reduced into {0,1,2,3}, so -1 and 3 are the same coefficient.
    explicit Z4Poly(std::span<const int> coeffs);
    Z4Poly(std::initializer_list<int> coeffs);

    static Z4Poly one() { return Z4Poly{1}; }
    /// X^n - 1, i.e. [3, 0, ..., 0, 1].
    static Z4Poly x_pow_minus_one(std::size_t n);

    std::span<const std::uint8_t> coeffs() const noexcept { return coeffs_; }
    std::uint8_t coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::uint8_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const noexcept { return leading() == 1; }

    friend bool operator==(const Z4Poly&, const Z4Poly&) = default;
    friend auto operator<=>(const Z4Poly&, const Z4Poly&) = default;

   private:
    void normalize();
    std::vector<std::uint8_t> coeffs_;
};

/// Polynomial over F2, same layout as Z4Poly with coefficients in {0,1}.
class F2Poly {
   public:
    F2Poly() = default;
    explicit F2Poly(std::span<const int> coeffs);
    F2Poly(std::initializer_list<int> coeffs);

    static F2Poly one() { return F2Poly{1}; }
    /// X^n + 1 over F2.
    static F2Poly x_pow_plus_one(std::size_t n);

    std::span<const std::uint8_t> coeffs() const noexcept { return coeffs_; }
    std::uint8_t coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty(); }

    friend bool operator==(const F2Poly&, const F2Poly&) = default;
    friend auto operator<=>(const F2Poly&, const F2Poly&) = default;

   private:
    void normalize();
    std::vector<std::uint8_t> coeffs_;
};

// Z4 arithmetic.
Z4Poly add(const Z4Poly& a, const Z4Poly& b);
Z4Poly sub(const Z4Poly& a, const Z4Poly& b);
Z4Poly mul(const Z4Poly& a, const Z4Poly& b);
/// Multiplies every coefficient by c (mod 4).
Z4Poly scale(const Z4Poly& a, int c);

/**
 * Division by a monic divisor. Returns (q, r) with a = q*d + r and deg r < deg d.
 * Throws std::invalid_argument when d is not monic (this includes d = 0).
 */
std::pair<Z4Poly, Z4Poly> divmod_monic(const Z4Poly& a, const Z4Poly& d);

/**
 * f*(X) = a0^{-1} X^{deg f} f(1/X).
 * Only defined for monic f whose constant term is a unit (1 or 3); anything
 * else throws std::invalid_argument.
 */
Z4Poly reciprocal(const Z4Poly& f);
bool is_self_reciprocal(const Z4Poly& f);

F2Poly reduce_mod2(const Z4Poly& a);

// F2 arithmetic.
F2Poly add(const F2Poly& a, const F2Poly& b);
F2Poly mul(const F2Poly& a, const F2Poly& b);
/// Throws std::invalid_argument on a zero divisor.
std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& d);
/// Monic gcd; gcd(0, 0) = 0.
F2Poly gcd(const F2Poly& a, const F2Poly& b);

inline Z4Poly operator+(const Z4Poly& a, const Z4Poly& b) { return add(a, b); }
inline Z4Poly operator-(const Z4Poly& a, const Z4Poly& b) { return sub(a, b); }
inline Z4Poly operator*(const Z4Poly& a, const Z4Poly& b) { return mul(a, b); }
inline F2Poly operator+(const F2Poly& a, const F2Poly& b) { return add(a, b); }
inline F2Poly operator*(const F2Poly& a, const F2Poly& b) { return mul(a, b); }

// Text forms.

/// "c0,c1,...", canonical residues; empty string for zero.
std::string to_coeff_string(const Z4Poly& p);
std::string to_coeff_string(const F2Poly& p);

/**
 * Parses "c0,c1,..." into a Z4Poly. Signed integers are allowed and reduced
 * mod 4, so "-1,1" is X-1. Whitespace around entries is ignored and the
 * empty string is the zero polynomial. Throws std::invalid_argument.
 */
Z4Poly parse_z4poly(std::string_view text);

/// Descending signed form with 3 shown as -1, e.g. "X^3+2X^2+X-1". Zero renders as "0".
std::string to_symbolic(const Z4Poly& p);
std::string to_symbolic(const F2Poly& p);

}  // namespace z4lcd

#endif  // Z4LCD_Z4POLY_HPP
