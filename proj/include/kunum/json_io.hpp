#pragma once

#include "kunum/clifford_char.hpp"
#include "kunum/riemann_roch.hpp"
#include "kunum/wall_engine.hpp"

#include <json.hpp>

#include <span>
#include <string>

namespace kunum {

/// Key order is preserved so that serialised output is byte-stable.
using Json = nlohmann::ordered_json;

/// "(a, b, c)" with exact rationals; with `decimal`, every non-integer
/// entry is followed by a 6-significant-digit approximation like "1/6 (0.166667~)".
std::string format_tuple(std::span<const Rat> values, bool decimal = false);
std::string format_rat(const Rat& r, bool decimal = false);
std::string format_char(const B0Char& c, bool decimal = false);
std::string format_kclass(const KClass& k, bool decimal = false);
/// "c + k*alpha^2" in lowest terms, e.g. "7/24 + 2/3*alpha^2".
std::string format_slope(const SlopePoly& s);

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

/// {"rk": "p/q", "c1": ..., "c2": ..., "beta": ...}
Json to_json(const B0Char& c);
B0Char b0char_from_json(const Json& j);

Json to_json(const WallSolution& s);
WallSolution wall_from_json(const Json& j);

/// {"target": {...}, "walls": [...]} plus "boundary" when requested.
Json walls_to_json(const B0Char& target, const WallReport& report, bool include_boundary);

} // namespace kunum
