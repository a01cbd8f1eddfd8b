#ifndef Z4LCD_WIRE_HPP
#define Z4LCD_WIRE_HPP

#include <json.hpp>
#include <vector>

#include "z4lcd/codes.hpp"
#include "z4lcd/cyclotomic.hpp"
#include "z4lcd/lcdenum.hpp"
#include "z4lcd/oracle.hpp"

namespace z4lcd::wire {

// JSON forms. Objects use nlohmann::json's sorted keys, so dump() is canonical.
// Polynomials travel as "c0,c1,..." strings of canonical residues.

using Json = nlohmann::json;

/// Counts that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json count_to_json(const BigCount& n);

Json to_json(const PairClass& pc);
Json to_json(const FactorTable& table);
/// Rebuilds a table from to_json output. Throws std::invalid_argument on malformed input.
FactorTable factor_table_from_json(const Json& j);

Json ids_to_json(const DivisorSet& d);
Json to_json(const CodeSpec& c);
CodeSpec code_spec_from_json(const Json& j, const TablePtr& table);

Json to_json(const HullReport& r);
Json to_json(const LcdCatalog& cat);
Json to_json(const oracle::SweepReport& r);

}  // namespace z4lcd::wire

#endif  // Z4LCD_WIRE_HPP
