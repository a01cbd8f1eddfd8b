#include "z4lcd/wire.hpp"

#include <limits>
#include <stdexcept>

namespace z4lcd::wire {

namespace {

FactorKind kind_from_string(const std::string& s) {
    if (s == "selfReciprocal") return FactorKind::self_reciprocal;
    if (s == "pairFirst") return FactorKind::pair_first;
    if (s == "pairSecond") return FactorKind::pair_second;
    throw std::invalid_argument("unknown factor kind \"" + s + "\"");
}

DivisorSet ids_from_json(const Json& j, const TablePtr& table) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of factor ids");
    return DivisorSet(table, j.get<std::vector<FactorId>>());
}

}  // namespace

Json count_to_json(const BigCount& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
    return n.str();
}

Json to_json(const PairClass& pc) {
    Json j{{"n", pc.n}, {"order2", pc.order2}, {"phi", pc.phi}, {"kind", std::string(to_string(pc.kind))}};
    if (pc.gamma) j["gamma"] = *pc.gamma;
    if (pc.beta) j["beta"] = *pc.beta;
    return j;
}

Json to_json(const FactorTable& table) {
    Json records = Json::array();
    for (const auto& r : table.records()) {
        records.push_back({{"id", r.id},
                           {"n", r.n},
                           {"i", r.i},
                           {"kind", std::string(to_string(r.kind))},
                           {"partner", r.partner},
                           {"coset", r.coset},
                           {"poly", to_coeff_string(r.poly)}});
    }
    return {{"N", table.N()}, {"records", std::move(records)}};
}

FactorTable factor_table_from_json(const Json& j) {
    try {
        std::vector<FactorRecord> records;
        for (const auto& jr : j.at("records")) {
            FactorRecord r;
            r.id = jr.at("id").get<FactorId>();
            r.n = jr.at("n").get<std::uint64_t>();
            r.i = jr.at("i").get<std::size_t>();
            r.kind = kind_from_string(jr.at("kind").get<std::string>());
            r.partner = jr.at("partner").get<FactorId>();
            r.coset = jr.at("coset").get<Coset>();
            r.poly = parse_z4poly(jr.at("poly").get<std::string>());
            records.push_back(std::move(r));
        }
        return FactorTable(j.at("N").get<std::uint64_t>(), std::move(records));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed factor table JSON: ") + e.what());
    }
}

Json ids_to_json(const DivisorSet& d) { return Json(std::vector<FactorId>(d.members().begin(), d.members().end())); }

Json to_json(const CodeSpec& c) {
    return {{"N", c.N()}, {"f", ids_to_json(c.f())}, {"g", ids_to_json(c.g())}, {"h", ids_to_json(c.h())}};
}

CodeSpec code_spec_from_json(const Json& j, const TablePtr& table) {
    try {
        if (j.at("N").get<std::uint64_t>() != table->N())
            throw std::invalid_argument("code spec length does not match the factor table");
        return CodeSpec(ids_from_json(j.at("f"), table), ids_from_json(j.at("g"), table),
                        ids_from_json(j.at("h"), table));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed code spec JSON: ") + e.what());
    }
}

Json to_json(const HullReport& r) {
    return {{"degH", r.degH},
            {"degG", r.degG},
            {"hullSize", count_to_json(r.hullSize)},
            {"lcd", r.lcd},
            {"H", ids_to_json(r.H)},
            {"G", ids_to_json(r.G)}};
}

Json to_json(const LcdCatalog& cat) {
    Json entries = Json::array();
    for (const auto& e : cat.entries)
        entries.push_back({{"f", ids_to_json(e.f)}, {"generator", to_coeff_string(e.generator)}, {"label", e.label}});
    return {{"N", cat.N}, {"nsrf", cat.nsrf}, {"count", cat.entries.size()}, {"entries", std::move(entries)}};
}

Json to_json(const oracle::SweepReport& r) {
    Json mismatches = Json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back({{"spec", to_json(m.spec)}, {"check", m.check}, {"expected", m.expected}, {"got", m.got}});
    return {{"N", r.N}, {"partitions", r.partitions}, {"mismatches", std::move(mismatches)}, {"lcdCount", r.lcdCount}};
}

}  // namespace z4lcd::wire
