#include "z4lcd/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "z4lcd/gf2m.hpp"

namespace z4lcd {

void require_odd_length(std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("N must be positive");
    if (N % 2 == 0) throw std::invalid_argument("N must be odd");
}

// ---------------------------------------------------------------- number theory

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    std::uint64_t phi = n;
    for (auto q : gf2m::prime_factors(n)) phi = phi / q * (q - 1);
    return phi;
}

std::uint64_t mult_order_of_2(std::uint64_t n) {
    require_odd_length(n);
    if (n == 1) return 1;
    std::uint64_t k = 1, power = 2 % n;
    while (power != 1) {
        power = (power * 2) % n;
        ++k;
    }
    return k;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::string_view to_string(PairKind kind) noexcept { return kind == PairKind::good ? "good" : "bad"; }

PairClass classify_pair(std::uint64_t n) {
    PairClass pc;
    pc.n = n;
    pc.order2 = mult_order_of_2(n);
    pc.phi = euler_phi(n);

    // 2^k mod n has period order2, so k <= order2 covers every residue reachable.
    const std::uint64_t minus_one = (n - 1) % n;
    bool good = false;
    std::uint64_t power = 1;
    for (std::uint64_t k = 1; k <= pc.order2 && !good; ++k) {
        power = (power * 2) % n;
        good = power == minus_one;
    }

    pc.kind = good ? PairKind::good : PairKind::bad;
    if (good)
        pc.gamma = pc.phi / pc.order2;
    else
        pc.beta = pc.phi / (2 * pc.order2);
    return pc;
}

// ---------------------------------------------------------------- factorization

std::vector<Coset> cyclotomic_cosets(std::uint64_t N) {
    require_odd_length(N);
    std::vector<bool> seen(N, false);
    std::vector<Coset> cosets;
    for (std::uint64_t s = 0; s < N; ++s) {
        if (seen[s]) continue;
        Coset c;
        for (std::uint64_t t = s; !seen[t]; t = (2 * t) % N) {
            seen[t] = true;
            c.push_back(t);
        }
        std::sort(c.begin() + 1, c.end());
        cosets.push_back(std::move(c));
    }
    return cosets;
}

namespace {

F2Poly minimal_polynomial(const gf2m::SplittingField& field, gf2m::Bits alpha, const Coset& coset) {
    // prod (X + alpha^j) with coefficients in GF(2^m), ascending
    std::vector<gf2m::Bits> acc{1};
    for (auto j : coset) {
        const gf2m::Bits root = field.pow(alpha, j);
        std::vector<gf2m::Bits> next(acc.size() + 1, 0);
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] ^= acc[k];
            next[k] ^= field.mul(root, acc[k]);
        }
        acc = std::move(next);
    }
    std::vector<int> coeffs;
    coeffs.reserve(acc.size());
    for (auto c : acc) {
        if (c > 1) throw std::logic_error("minimal_polynomial: coefficient outside F2");
        coeffs.push_back(static_cast<int>(c));
    }
    return F2Poly(coeffs);
}

std::vector<F2Poly> factor_from_cosets(std::uint64_t N, const std::vector<Coset>& cosets) {
    const auto m = mult_order_of_2(N);
    if (m > gf2m::kMaxDegree)
        throw std::invalid_argument("splitting field GF(2^" + std::to_string(m) + ") for N = " + std::to_string(N) +
                                    " exceeds the supported degree " + std::to_string(gf2m::kMaxDegree));
    const gf2m::SplittingField field(static_cast<unsigned>(m));
    const auto alpha = field.element_of_order(N);
    std::vector<F2Poly> out;
    out.reserve(cosets.size());
    for (const auto& c : cosets) out.push_back(minimal_polynomial(field, alpha, c));
    return out;
}

}  // namespace

std::vector<F2Poly> factor_mod2(std::uint64_t N) { return factor_from_cosets(N, cyclotomic_cosets(N)); }

Z4Poly graeffe_lift(const F2Poly& f2) {
    if (f2.is_zero()) throw std::invalid_argument("graeffe_lift: zero polynomial");
    if (f2.coeff(0) != 1) throw std::invalid_argument("graeffe_lift: constant term must be nonzero");

    const auto c = f2.coeffs();
    std::vector<int> even((c.size() + 1) / 2, 0), odd(c.size() / 2, 0);
    for (std::size_t k = 0; k < c.size(); ++k) (k % 2 ? odd[k / 2] : even[k / 2]) = c[k];
    const Z4Poly e(even), o(odd);
    const Z4Poly x{0, 1};
    const Z4Poly h = e * e - x * o * o;
    return f2.degree() % 2 ? scale(h, -1) : h;
}

// ---------------------------------------------------------------- factor table

std::string_view to_string(FactorKind kind) noexcept {
    switch (kind) {
        case FactorKind::self_reciprocal:
            return "selfReciprocal";
        case FactorKind::pair_first:
            return "pairFirst";
        case FactorKind::pair_second:
            return "pairSecond";
    }
    return "?";
}

std::string FactorRecord::label() const {
    std::string prefix = kind == FactorKind::self_reciprocal ? "g" : kind == FactorKind::pair_first ? "f" : "f*";
    return prefix + "[" + std::to_string(i) + "," + std::to_string(n) + "]";
}

FactorTable::FactorTable(std::uint64_t N, std::vector<FactorRecord> records) : N_(N), records_(std::move(records)) {
    for (std::size_t k = 0; k < records_.size(); ++k) {
        const auto& r = records_[k];
        if (r.id != k || r.partner >= records_.size())
            throw std::invalid_argument("FactorTable: record ids must be 0..size-1 with valid partners");
    }
}

std::vector<std::vector<FactorId>> FactorTable::atoms() const {
    std::vector<std::vector<FactorId>> out;
    for (const auto& r : records_) {
        if (r.kind == FactorKind::self_reciprocal)
            out.push_back({r.id});
        else if (r.kind == FactorKind::pair_first)
            out.push_back({std::min(r.id, r.partner), std::max(r.id, r.partner)});
    }
    return out;
}

std::size_t FactorTable::pair_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(),
                                                  [](const auto& r) { return r.kind == FactorKind::pair_first; }));
}

FactorTable build_factor_table(std::uint64_t N) {
    const auto cosets = cyclotomic_cosets(N);
    const auto mod2 = factor_from_cosets(N, cosets);

    std::vector<FactorId> coset_of(N);
    for (std::size_t j = 0; j < cosets.size(); ++j)
        for (auto s : cosets[j]) coset_of[s] = j;

    std::vector<FactorRecord> records(cosets.size());
    for (std::size_t j = 0; j < cosets.size(); ++j) {
        auto& r = records[j];
        const auto rep = cosets[j].front();
        r.id = j;
        r.coset = cosets[j];
        r.poly = graeffe_lift(mod2[j]);
        r.n = N / std::gcd(N, rep);
        r.partner = coset_of[(N - rep) % N];
    }

    std::vector<std::pair<std::uint64_t, std::size_t>> block_counter;  // (n, last i)
    auto next_index = [&](std::uint64_t n) {
        for (auto& [bn, last] : block_counter)
            if (bn == n) return ++last;
        block_counter.emplace_back(n, 1);
        return std::size_t{1};
    };

    for (auto& r : records) {
        const bool self = is_self_reciprocal(r.poly);
        if (self != (r.partner == r.id))
            throw std::logic_error("build_factor_table: lifted factor reciprocity disagrees with its coset");
        if (!self && reciprocal(r.poly) != records[r.partner].poly)
            throw std::logic_error("build_factor_table: reciprocal partner mismatch");

        if (self) {
            r.kind = FactorKind::self_reciprocal;
            r.i = next_index(r.n);
        } else if (r.partner > r.id) {
            r.kind = FactorKind::pair_first;
            r.i = next_index(r.n);
        } else {
            r.kind = FactorKind::pair_second;
            r.i = records[r.partner].i;
        }
    }
    return FactorTable(N, std::move(records));
}

}  // namespace z4lcd
