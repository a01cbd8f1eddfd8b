#include "z4lcd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace z4lcd::oracle {

namespace {

std::uint32_t mask_of(std::uint64_t N) { return static_cast<std::uint32_t>((std::uint64_t{1} << N) - 1); }

std::uint32_t rotl(std::uint32_t v, std::uint64_t N) {
    const auto m = mask_of(N);
    return ((v << 1) | (v >> (N - 1))) & m;
}

}  // namespace

PackedWord pack(const Codeword& w) {
    PackedWord p;
    for (std::size_t k = 0; k < w.entries.size(); ++k) {
        p.lo |= static_cast<std::uint32_t>(w.entries[k] & 1) << k;
        p.hi |= static_cast<std::uint32_t>(w.entries[k] >> 1 & 1) << k;
    }
    return p;
}

Codeword unpack(PackedWord w, std::uint64_t N) {
    Codeword c;
    c.entries.resize(N);
    for (std::uint64_t k = 0; k < N; ++k) c.entries[k] = static_cast<std::uint8_t>((w.lo >> k & 1) + 2 * (w.hi >> k & 1));
    return c;
}

PackedWord add(PackedWord a, PackedWord b) noexcept { return {a.lo ^ b.lo, a.hi ^ b.hi ^ (a.lo & b.lo)}; }

PackedWord shift(PackedWord w, std::uint64_t N) noexcept { return {rotl(w.lo, N), rotl(w.hi, N)}; }

unsigned inner_product(PackedWord a, PackedWord b) noexcept {
    // (a0 + 2 a1)(b0 + 2 b1) = a0 b0 + 2 (a0 b1 + a1 b0) mod 4
    const auto odd = std::popcount(a.lo & b.lo);
    const auto even = std::popcount(a.lo & b.hi) + std::popcount(a.hi & b.lo);
    return static_cast<unsigned>(odd + 2 * even) & 3u;
}

Codeword to_codeword(const Z4Poly& p, std::uint64_t N) {
    Codeword c;
    c.entries.assign(N, 0);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        auto& e = c.entries[k % N];
        e = static_cast<std::uint8_t>((e + p.coeffs()[k]) & 3);
    }
    return c;
}

// ---------------------------------------------------------------- CodeSet

CodeSet::CodeSet(std::uint64_t N, std::vector<std::uint64_t> keys, std::vector<PackedWord> spanning)
    : N_(N), keys_(std::move(keys)), spanning_(std::move(spanning)) {
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

bool CodeSet::contains(PackedWord w) const noexcept { return std::binary_search(keys_.begin(), keys_.end(), w.key()); }

std::vector<Codeword> CodeSet::words() const {
    std::vector<Codeword> out;
    out.reserve(keys_.size());
    for (auto k : keys_) out.push_back(unpack(PackedWord::from_key(k), N_));
    return out;
}

bool CodeSet::is_subset_of(const CodeSet& other) const {
    return N_ == other.N_ && std::includes(other.keys_.begin(), other.keys_.end(), keys_.begin(), keys_.end());
}

// ---------------------------------------------------------------- brute force

void require_within_bound(std::uint64_t N, std::uint64_t bound) {
    if (bound > kMaxBound)
        throw std::invalid_argument("brute-force bound " + std::to_string(bound) + " exceeds the hard limit " +
                                    std::to_string(kMaxBound));
    if (N > bound)
        throw BoundExceeded("N = " + std::to_string(N) + " exceeds the brute-force bound " + std::to_string(bound));
}

CodeSet span(std::uint64_t N, const std::vector<Codeword>& generators, std::uint64_t bound, Traversal order) {
    require_odd_length(N);
    require_within_bound(N, bound);

    std::vector<PackedWord> spanning;
    for (const auto& g : generators) {
        if (g.entries.size() != N) throw std::invalid_argument("span: generator length differs from N");
        PackedWord w = pack(g);
        if (w.lo == 0 && w.hi == 0) continue;
        for (std::uint64_t s = 0; s < N; ++s, w = shift(w, N)) spanning.push_back(w);
    }

    std::vector<bool> seen(std::size_t{1} << (2 * N), false);
    auto index = [N](PackedWord w) { return w.lo | (std::size_t{w.hi} << N); };
    std::vector<std::uint64_t> keys{0};
    seen[0] = true;
    std::deque<PackedWord> work{PackedWord{}};
    while (!work.empty()) {
        PackedWord w;
        if (order == Traversal::breadth_first) {
            w = work.front();
            work.pop_front();
        } else {
            w = work.back();
            work.pop_back();
        }
        for (auto g : spanning) {
            const auto u = add(w, g);
            if (seen[index(u)]) continue;
            seen[index(u)] = true;
            keys.push_back(u.key());
            work.push_back(u);
        }
    }
    return CodeSet(N, std::move(keys), std::move(spanning));
}

CodeSet expand_code(const CodeSpec& c, std::uint64_t bound, Traversal order) {
    const auto N = c.N();
    require_within_bound(N, bound);
    const auto f = divisor_poly(c.f());
    const auto fg = f * divisor_poly(c.g());
    return span(N, {to_codeword(fg, N), to_codeword(scale(f, 2), N)}, bound, order);
}

CodeSet dual_bruteforce(const CodeSet& c, std::uint64_t bound) {
    const auto N = c.N();
    require_within_bound(N, bound);
    const auto& gens = c.spanning();
    const std::uint32_t limit = std::uint32_t{1} << N;

    std::vector<std::uint64_t> keys;
    std::vector<PackedWord> words;
    for (std::uint32_t hi = 0; hi < limit; ++hi) {
        for (std::uint32_t lo = 0; lo < limit; ++lo) {
            const PackedWord v{lo, hi};
            bool orthogonal = true;
            for (auto g : gens)
                if (inner_product(v, g)) {
                    orthogonal = false;
                    break;
                }
            if (!orthogonal) continue;
            keys.push_back(v.key());
            words.push_back(v);
        }
    }
    return CodeSet(N, std::move(keys), std::move(words));
}

std::uint64_t hull_bruteforce(const CodeSpec& c, std::uint64_t bound) {
    const auto code = expand_code(c, bound);
    const auto dual = dual_bruteforce(code, bound);
    std::uint64_t count = 0;
    for (auto k : code.keys()) count += dual.contains(PackedWord::from_key(k));
    return count;
}

SweepReport sweep_verify(std::uint64_t N, std::uint64_t bound) {
    require_odd_length(N);
    require_within_bound(N, bound);
    const auto table = make_factor_table(N);

    SweepReport report;
    report.N = N;
    for (const auto& c : all_partitions(table)) {
        ++report.partitions;
        const auto formula = hull_report(c);
        const auto code = expand_code(c, bound);
        const auto dual = dual_bruteforce(code, bound);
        std::uint64_t hull = 0;
        for (auto k : code.keys()) hull += dual.contains(PackedWord::from_key(k));

        if (BigCount(hull) != formula.hullSize)
            report.mismatches.push_back({c, "hullSize", std::to_string(hull), formula.hullSize.str()});
        if (BigCount(code.size()) != code_size(c))
            report.mismatches.push_back({c, "codeSize", std::to_string(code.size()), code_size(c).str()});
        const bool brute_lcd = hull == 1;
        const bool criterion = has_self_reciprocal_generator(c);
        if (brute_lcd != formula.lcd || brute_lcd != criterion)
            report.mismatches.push_back({c, "lcdCriterion", brute_lcd ? "true" : "false",
                                         std::string("hullReport=") + (formula.lcd ? "true" : "false") +
                                             ",selfReciprocal=" + (criterion ? "true" : "false")});
        report.lcdCount += brute_lcd;
    }
    return report;
}

}  // namespace z4lcd::oracle
