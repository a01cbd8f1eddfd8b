#include "z4lcd/z4poly.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace z4lcd {

namespace {

std::uint8_t mod4(long long v) { return static_cast<std::uint8_t>(((v % 4) + 4) % 4); }

std::uint8_t mod2(long long v) { return static_cast<std::uint8_t>(((v % 2) + 2) % 2); }

template <class Poly>
std::string coeff_string(const Poly& p) {
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += ',';
        out += std::to_string(p.coeffs()[k]);
    }
    return out;
}

std::string monomial(std::size_t k) {
    if (k == 0) return "";
    if (k == 1) return "X";
    return "X^" + std::to_string(k);
}

// Each term is (signed magnitude, exponent) with magnitude in {1, 2}.
std::string render_terms(const std::vector<std::pair<int, std::size_t>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto [c, k] : terms) {
        const bool negative = c < 0;
        const int mag = negative ? -c : c;
        if (negative)
            out += '-';
        else if (!first)
            out += '+';
        if (k == 0)
            out += std::to_string(mag);
        else {
            if (mag != 1) out += std::to_string(mag);
            out += monomial(k);
        }
        first = false;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Z4Poly

Z4Poly::Z4Poly(std::span<const int> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (int c : coeffs) coeffs_.push_back(mod4(c));
    normalize();
}

Z4Poly::Z4Poly(std::initializer_list<int> coeffs) : Z4Poly(std::span<const int>(coeffs.begin(), coeffs.size())) {}

Z4Poly Z4Poly::x_pow_minus_one(std::size_t n) {
    std::vector<int> c(n + 1, 0);
    c.front() -= 1;
    c.back() += 1;
    return Z4Poly(c);
}

void Z4Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

// ---------------------------------------------------------------- F2Poly

F2Poly::F2Poly(std::span<const int> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (int c : coeffs) coeffs_.push_back(mod2(c));
    normalize();
}

F2Poly::F2Poly(std::initializer_list<int> coeffs) : F2Poly(std::span<const int>(coeffs.begin(), coeffs.size())) {}

F2Poly F2Poly::x_pow_plus_one(std::size_t n) {
    std::vector<int> c(n + 1, 0);
    c.front() += 1;
    c.back() += 1;
    return F2Poly(c);
}

void F2Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

// ---------------------------------------------------------------- Z4 arithmetic

Z4Poly add(const Z4Poly& a, const Z4Poly& b) {
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Z4Poly(c);
}

Z4Poly sub(const Z4Poly& a, const Z4Poly& b) {
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return Z4Poly(c);
}

Z4Poly mul(const Z4Poly& a, const Z4Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<int> c(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (!ac[i]) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] = (c[i + j] + ac[i] * bc[j]) & 3;
    }
    return Z4Poly(c);
}

Z4Poly scale(const Z4Poly& a, int c) {
    std::vector<int> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& v : out) v *= c;
    return Z4Poly(out);
}

std::pair<Z4Poly, Z4Poly> divmod_monic(const Z4Poly& a, const Z4Poly& d) {
    if (!d.is_monic()) throw std::invalid_argument("divmod_monic: divisor must be monic");
    if (a.degree() < d.degree()) return {Z4Poly{}, a};

    const auto dc = d.coeffs();
    const std::size_t dd = dc.size() - 1;
    std::vector<int> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<int> quo(rem.size() - dd, 0);
    for (std::size_t k = rem.size(); k-- > dd;) {
        const int lead = rem[k] & 3;
        if (!lead) continue;
        const std::size_t shift = k - dd;
        quo[shift] = lead;
        for (std::size_t j = 0; j <= dd; ++j) rem[shift + j] = (rem[shift + j] - lead * dc[j]) & 3;
    }
    rem.resize(dd);
    return {Z4Poly(quo), Z4Poly(rem)};
}

Z4Poly reciprocal(const Z4Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("reciprocal: polynomial must be monic");
    const std::uint8_t a0 = f.coeff(0);
    if (a0 != 1 && a0 != 3) throw std::invalid_argument("reciprocal: constant term must be a unit of Z4");
    // 1 and 3 are their own inverses mod 4.
    std::vector<int> rev(f.coeffs().rbegin(), f.coeffs().rend());
    for (auto& v : rev) v *= a0;
    return Z4Poly(rev);
}

bool is_self_reciprocal(const Z4Poly& f) { return reciprocal(f) == f; }

F2Poly reduce_mod2(const Z4Poly& a) {
    std::vector<int> c(a.coeffs().begin(), a.coeffs().end());
    return F2Poly(c);
}

// ---------------------------------------------------------------- F2 arithmetic

F2Poly add(const F2Poly& a, const F2Poly& b) {
    std::vector<int> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) ^ b.coeff(k);
    return F2Poly(c);
}

F2Poly mul(const F2Poly& a, const F2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<int> c(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (!ac[i]) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] ^= bc[j];
    }
    return F2Poly(c);
}

std::pair<F2Poly, F2Poly> divmod(const F2Poly& a, const F2Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
    if (a.degree() < d.degree()) return {F2Poly{}, a};

    const auto dc = d.coeffs();
    const std::size_t dd = dc.size() - 1;
    std::vector<int> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<int> quo(rem.size() - dd, 0);
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (!rem[k]) continue;
        const std::size_t shift = k - dd;
        quo[shift] = 1;
        for (std::size_t j = 0; j <= dd; ++j) rem[shift + j] ^= dc[j];
    }
    rem.resize(dd);
    return {F2Poly(quo), F2Poly(rem)};
}

F2Poly gcd(const F2Poly& a, const F2Poly& b) {
    F2Poly x = a, y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x;  // over F2 every nonzero polynomial is already monic
}

// ---------------------------------------------------------------- text

std::string to_coeff_string(const Z4Poly& p) { return coeff_string(p); }

std::string to_coeff_string(const F2Poly& p) { return coeff_string(p); }

Z4Poly parse_z4poly(std::string_view text) {
    auto trim = [](std::string_view s) {
        const auto b = s.find_first_not_of(" \t");
        if (b == std::string_view::npos) return std::string_view{};
        const auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    text = trim(text);
    if (text.empty()) return {};

    std::vector<int> coeffs;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (!item.empty() && item.front() == '+') item.remove_prefix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw std::invalid_argument("malformed polynomial coefficient list: \"" + std::string(text) + "\"");
        coeffs.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Z4Poly(coeffs);
}

std::string to_symbolic(const Z4Poly& p) {
    std::vector<std::pair<int, std::size_t>> terms;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const int c = p.coeffs()[k];
        if (c) terms.emplace_back(c == 3 ? -1 : c, k);
    }
    return render_terms(terms);
}

std::string to_symbolic(const F2Poly& p) {
    std::vector<std::pair<int, std::size_t>> terms;
    for (std::size_t k = p.coeffs().size(); k-- > 0;)
        if (p.coeffs()[k]) terms.emplace_back(1, k);
    return render_terms(terms);
}

}  // namespace z4lcd
