#include "z4lcd/gf2m.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace z4lcd::gf2m {

int degree(Bits p) noexcept { return static_cast<int>(std::bit_width(p)) - 1; }

Bits mod(Bits a, Bits modulus) noexcept {
    const int dm = degree(modulus);
    for (int da = degree(a); da >= dm; da = degree(a)) a ^= modulus << (da - dm);
    return a;
}

Bits mulmod(Bits a, Bits b, Bits modulus) noexcept {
    const int dm = degree(modulus);
    const Bits top = Bits{1} << dm;
    a = mod(a, modulus);
    Bits r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= modulus;
    }
    return r;
}

Bits gcd(Bits a, Bits b) noexcept {
    while (b) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible(Bits p) noexcept {
    const int m = degree(p);
    if (m < 1) return false;
    const Bits x = mod(Bits{2}, p);
    // frob[k] = X^(2^k) mod p
    std::vector<Bits> frob(static_cast<std::size_t>(m) + 1);
    frob[0] = x;
    for (int k = 1; k <= m; ++k) frob[k] = mulmod(frob[k - 1], frob[k - 1], p);
    if (frob[m] != x) return false;
    for (auto q : prime_factors(static_cast<std::uint64_t>(m)))
        if (gcd(frob[m / q] ^ x, p) != 1) return false;
    return true;
}

Bits least_irreducible(unsigned m) {
    if (m < 1 || m > kMaxDegree) throw std::out_of_range("least_irreducible: degree " + std::to_string(m) + " unsupported");
    for (Bits p = Bits{1} << m; p < (Bits{2} << m); ++p)
        if (is_irreducible(p)) return p;
    throw std::logic_error("least_irreducible: no irreducible polynomial found");
}

SplittingField::SplittingField(unsigned m) : m_(m), modulus_(least_irreducible(m)) {}

Bits SplittingField::pow(Bits a, std::uint64_t e) const noexcept {
    Bits r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Bits SplittingField::least_primitive() const {
    const std::uint64_t order = group_order();
    const auto primes = prime_factors(order);
    for (Bits beta = 1; beta <= order; ++beta) {
        bool full = true;
        for (auto q : primes)
            if (pow(beta, order / q) == 1) {
                full = false;
                break;
            }
        if (full) return beta;
    }
    throw std::logic_error("least_primitive: no generator found");
}

Bits SplittingField::element_of_order(std::uint64_t n) const {
    if (n == 0 || group_order() % n) throw std::invalid_argument("element_of_order: n must divide 2^m - 1");
    return pow(least_primitive(), group_order() / n);
}

}  // namespace z4lcd::gf2m
