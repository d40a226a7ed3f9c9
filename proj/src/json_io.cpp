#include "kunum/json_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace kunum {

std::string format_rat(const Rat& r, bool decimal)
{
    std::string s = r.str();
    if (decimal && !r.is_integer()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", r.to_double());
        s += " (";
        s += buf;
        s += "~)";
    }
    return s;
}

std::string format_tuple(std::span<const Rat> values, bool decimal)
{
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ", ";
        out += format_rat(values[i], decimal);
    }
    return out + ")";
}

std::string format_char(const B0Char& c, bool decimal)
{
    const Rat v[] = {c.rk, c.c1, c.c2};
    return format_tuple(v, decimal);
}

std::string format_kclass(const KClass& k, bool decimal)
{
    const auto t = k.display_tuple();
    return format_tuple(t, decimal);
}

std::string format_slope(const SlopePoly& s)
{
    if (s.alpha_sq_coeff.is_zero())
        return s.constant.str();
    std::string out = s.constant.is_zero() ? "" : s.constant.str() + " ";
    if (s.alpha_sq_coeff.sign() < 0)
        out += s.constant.is_zero() ? "-" : "- ";
    else if (!s.constant.is_zero())
        out += "+ ";
    return out + s.alpha_sq_coeff.abs().str() + "*alpha^2";
}

Json to_json(const Rat& r)
{
    return r.str();
}

Rat rat_from_json(const Json& j)
{
    if (!j.is_string())
        throw std::invalid_argument("exact rational must be a JSON string, got " + j.dump());
    return Rat::parse(j.get<std::string>());
}

Json to_json(const B0Char& c)
{
    Json j;
    j["rk"] = to_json(c.rk);
    j["c1"] = to_json(c.c1);
    j["c2"] = to_json(c.c2);
    j["beta"] = to_json(c.beta);
    return j;
}

B0Char b0char_from_json(const Json& j)
{
    return {rat_from_json(j.at("rk")), rat_from_json(j.at("c1")), rat_from_json(j.at("c2")),
            rat_from_json(j.at("beta"))};
}

Json to_json(const WallSolution& s)
{
    Json j;
    j["alpha_sq"] = to_json(s.alpha_sq);
    j["alpha_approx"] = alpha_approx(s.alpha_sq);
    j["sub"] = to_json(s.sub);
    j["quot"] = to_json(s.quot);
    j["coeffs"] = Json::array({s.coeffs[0], s.coeffs[1], s.coeffs[2]});
    return j;
}

WallSolution wall_from_json(const Json& j)
{
    const auto& c = j.at("coeffs");
    return {rat_from_json(j.at("alpha_sq")), b0char_from_json(j.at("sub")), b0char_from_json(j.at("quot")),
            {c.at(0).get<std::int64_t>(), c.at(1).get<std::int64_t>(), c.at(2).get<std::int64_t>()}};
}

Json walls_to_json(const B0Char& target, const WallReport& report, bool include_boundary)
{
    Json j;
    j["target"] = to_json(target);
    Json walls = Json::array();
    for (const auto& w : report.walls)
        walls.push_back(to_json(w));
    j["walls"] = std::move(walls);
    if (include_boundary) {
        Json boundary = Json::array();
        for (const auto& w : report.boundary)
            boundary.push_back(to_json(w));
        j["boundary"] = std::move(boundary);
    }
    return j;
}

} // namespace kunum
