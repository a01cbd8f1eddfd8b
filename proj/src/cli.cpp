#include "z4lcd/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "z4lcd/codes.hpp"
#include "z4lcd/cyclotomic.hpp"
#include "z4lcd/lcdenum.hpp"
#include "z4lcd/oracle.hpp"
#include "z4lcd/wire.hpp"

namespace z4lcd::cli {

namespace {

struct Options {
    long long N = 0;
    bool json = false;
    std::string f_arg;
    std::string g_arg = "1";
    std::uint64_t max_bruteforce = oracle::kDefaultBound;
};

std::uint64_t checked_length(long long N) {
    if (N <= 0) throw std::invalid_argument("N must be positive");
    require_odd_length(static_cast<std::uint64_t>(N));
    return static_cast<std::uint64_t>(N);
}

std::string join_ids(std::span<const FactorId> ids) {
    std::string s = "{";
    for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? "," : "") + std::to_string(ids[k]);
    return s + "}";
}

std::string set_labels(const DivisorSet& d) {
    if (d.is_empty()) return "1";
    std::string s;
    for (auto id : d.members()) s += d.table()->at(id).label();
    return s;
}

std::string coset_text(const Coset& c) {
    std::string s = "{";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
    return s + "}";
}

// "ids:0,2" selects factors by id, anything else is a coefficient list.
DivisorSet resolve_divisor(const std::string& arg, const TablePtr& table) {
    constexpr std::string_view prefix = "ids:";
    if (arg.rfind(prefix, 0) != 0) return factor_divisor(parse_z4poly(arg), table);

    std::vector<FactorId> ids;
    std::string_view rest(arg);
    rest.remove_prefix(prefix.size());
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        FactorId id = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), id);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw std::invalid_argument("malformed factor id list: \"" + arg + "\"");
        ids.push_back(id);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return DivisorSet(table, std::move(ids));
}

void print_json(std::ostream& out, const wire::Json& j) { out << j.dump(2) << '\n'; }

int cmd_factor(const Options& o, std::ostream& out) {
    const auto N = checked_length(o.N);
    const auto table = build_factor_table(N);
    if (o.json) {
        print_json(out, wire::to_json(table));
        return kOk;
    }
    out << to_symbolic(Z4Poly::x_pow_minus_one(N)) << " = ";
    for (const auto& r : table.records()) out << '(' << to_symbolic(r.poly) << ')';
    out << '\n';
    for (const auto& r : table.records()) {
        out << r.label() << " = " << to_symbolic(r.poly) << "  [" << to_coeff_string(r.poly) << "]  id=" << r.id
            << " n=" << r.n << ' ' << to_string(r.kind) << " partner=" << r.partner << " coset=" << coset_text(r.coset)
            << '\n';
    }
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const auto N = checked_length(o.N);
    wire::Json rows = wire::Json::array();
    for (auto n : divisors(N)) {
        const auto pc = classify_pair(n);
        if (o.json) {
            rows.push_back(wire::to_json(pc));
            continue;
        }
        out << "n=" << pc.n << ' ' << to_string(pc.kind) << " ord=" << pc.order2 << " phi=" << pc.phi;
        if (pc.gamma) out << " gamma=" << *pc.gamma;
        if (pc.beta) out << " beta=" << *pc.beta;
        out << '\n';
    }
    if (o.json) print_json(out, {{"N", N}, {"divisors", std::move(rows)}});
    return kOk;
}

int cmd_hull(const Options& o, std::ostream& out) {
    const auto N = checked_length(o.N);
    const auto table = make_factor_table(N);
    const auto code = CodeSpec::from_fg(resolve_divisor(o.f_arg, table), resolve_divisor(o.g_arg, table));
    const auto report = hull_report(code);
    if (o.json) {
        print_json(out, {{"code", wire::to_json(code)}, {"hull", wire::to_json(report)}});
        return kOk;
    }
    out << "f = " << set_labels(code.f()) << " " << join_ids(code.f().members()) << '\n'
        << "g = " << set_labels(code.g()) << " " << join_ids(code.g().members()) << '\n'
        << "h = " << set_labels(code.h()) << " " << join_ids(code.h().members()) << '\n'
        << "H = " << set_labels(report.H) << " degH=" << report.degH << '\n'
        << "G = " << set_labels(report.G) << " degG=" << report.degG << '\n'
        << "hullSize = " << report.hullSize << '\n'
        << (report.lcd ? "LCD" : "not LCD") << '\n';
    return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const auto cat = enumerate_lcd(checked_length(o.N));
    if (o.json) {
        print_json(out, wire::to_json(cat));
        return kOk;
    }
    out << "N=" << cat.N << " nsrf=" << cat.nsrf << " count=" << cat.entries.size() << '\n';
    for (const auto& e : cat.entries)
        out << e.label << "  f=" << join_ids(e.f.members()) << "  generator=" << to_symbolic(e.generator) << "  ["
            << to_coeff_string(e.generator) << "]\n";
    return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
    const auto N = checked_length(o.N);
    const auto nsrf = count_nsrf(N);
    const auto count = count_lcd(N);
    if (o.json)
        print_json(out, {{"N", N}, {"nsrf", nsrf}, {"count", wire::count_to_json(count)}});
    else
        out << "N=" << N << " nsrf=" << nsrf << " count=" << count << '\n';
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto N = checked_length(o.N);
    const auto report = oracle::sweep_verify(N, o.max_bruteforce);
    if (o.json) {
        print_json(out, wire::to_json(report));
    } else {
        out << "N=" << N << ": " << report.partitions << " partitions, " << report.mismatches.size() << " mismatches, "
            << report.lcdCount << " LCD\n";
        for (const auto& m : report.mismatches)
            out << "  mismatch " << m.check << " f=" << join_ids(m.spec.f().members())
                << " g=" << join_ids(m.spec.g().members()) << " h=" << join_ids(m.spec.h().members())
                << ": brute force " << m.expected << ", formula " << m.got << '\n';
    }
    return report.ok() ? kOk : kVerifyMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Cyclic LCD codes over Z4 of odd length"};
    app.name("z4lcd");
    app.require_subcommand(1);
    app.set_config("--config", "", "INI/TOML file with option defaults, e.g. [verify] max-bruteforce=11");
    app.add_flag("--json", o.json, "Structured JSON output");

    auto add_length = [&](CLI::App* sub) { sub->add_option("N", o.N, "Odd code length")->required(); };

    auto* factor = app.add_subcommand("factor", "Factor X^N-1 into basic irreducibles over Z4");
    auto* classify = app.add_subcommand("classify", "Good/bad classification of (n,2) for every n | N");
    auto* hull = app.add_subcommand("hull", "Hull size of C = (f g, 2 f)");
    auto* enumerate = app.add_subcommand("enumerate-lcd", "List every cyclic LCD code of length N");
    auto* count = app.add_subcommand("count-lcd", "Number of cyclic LCD codes of length N");
    auto* verify = app.add_subcommand("verify", "Brute-force check of every (f,g,h) partition");
    for (auto* sub : {factor, classify, hull, enumerate, count, verify}) {
        add_length(sub);
        sub->add_flag("--json", o.json, "Structured JSON output");
    }
    hull->add_option("--f", o.f_arg, "f as coefficients \"c0,c1,...\" or ids \"ids:0,2\"")->required();
    hull->add_option("--g", o.g_arg, "g as coefficients or ids (default 1)");
    verify->add_option("--max-bruteforce", o.max_bruteforce, "Largest N the brute-force oracle accepts")
        ->check(CLI::Range(std::uint64_t{1}, oracle::kMaxBound));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (factor->parsed()) return cmd_factor(o, out);
        if (classify->parsed()) return cmd_classify(o, out);
        if (hull->parsed()) return cmd_hull(o, out);
        if (enumerate->parsed()) return cmd_enumerate(o, out);
        if (count->parsed()) return cmd_count(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const oracle::BoundExceeded& e) {
        err << "error: " << e.what() << " (raise it with --max-bruteforce, at most " << oracle::kMaxBound << ")\n";
        return kUsageError;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kUsageError;
}

}  // namespace z4lcd::cli
