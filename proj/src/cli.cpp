#include "kunum/cli.hpp"

#include "kunum/json_io.hpp"
#include "kunum/verify.hpp"

#include <CLI11.hpp>

#include <map>
#include <optional>
#include <sstream>

namespace kunum {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalFlags {
    bool json = false;
    bool decimal = false;
    unsigned jobs = 1;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        parts.push_back(cur);
    if (!s.empty() && s.back() == sep)
        parts.emplace_back();
    return parts;
}

Rat parse_rat_arg(const std::string& s)
{
    try {
        return Rat::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<Rat> parse_rat_list(const std::string& s, std::size_t n, const char* what)
{
    const auto parts = split(s, ',');
    if (parts.size() != n)
        throw UsageError(std::string(what) + " needs " + std::to_string(n) + " comma-separated values, got '" + s + "'");
    std::vector<Rat> out;
    for (const auto& p : parts)
        out.push_back(parse_rat_arg(p));
    return out;
}

// K-classes on Y addressable by name.
std::optional<KClass> named_kclass(const std::string& name)
{
    const auto [l1, l2] = lambda_classes();
    if (name == "lambda1" || name == "l1")
        return l1;
    if (name == "lambda2" || name == "l2")
        return l2;
    if (name == "2l1+2l2")
        return Rat(2) * l1 + Rat(2) * l2;
    if (name == "l1+l2")
        return l1 + l2;
    if (name == "p_ell")
        return p_ell_class();
    if (name == "e_gamma")
        return e_gamma_class();
    if (name == "e_c")
        return e_c_class();
    // O(k) or O(p/q)
    if (name.size() > 3 && name.rfind("O(", 0) == 0 && name.back() == ')')
        return line_bundle(parse_rat_arg(name.substr(2, name.size() - 3)));
    return std::nullopt;
}

// Psi rho^* image addressed as psi:a,b or psi:<lambda name>.
std::optional<B0Char> named_psi(const std::string& expr)
{
    static const std::map<std::string, std::pair<int, int>> known = {
        {"lambda1", {1, 0}}, {"l1", {1, 0}}, {"lambda2", {0, 1}}, {"l2", {0, 1}},
        {"2l1+2l2", {2, 2}}, {"l1+l2", {1, 1}},
    };
    if (auto it = known.find(expr); it != known.end())
        return psi_rho_image(it->second.first, it->second.second);
    const auto v = parse_rat_list(expr, 2, "psi:<a>,<b>");
    return psi_rho_image(v[0], v[1]);
}

Json kclass_json(const std::string& name, const KClass& k)
{
    Json j;
    j["class"] = name;
    j["variety"] = "Y";
    Json ch = Json::array();
    for (const auto& r : k.display_tuple())
        ch.push_back(to_json(r));
    j["ch"] = std::move(ch);
    Json coeffs = Json::array();
    for (const auto& r : k.ch().coeffs())
        coeffs.push_back(to_json(r));
    j["h_coeffs"] = std::move(coeffs);
    return j;
}

int cmd_chern(const std::string& name, const std::optional<std::string>& twist_arg, const GlobalFlags& g,
              std::ostream& out)
{
    std::optional<B0Char> b0;
    if (name.size() > 1 && name[0] == 'B') {
        try {
            std::size_t pos = 0;
            const long j = std::stol(name.substr(1), &pos);
            if (pos != name.size() - 1)
                throw UsageError("bad B<j> index in '" + name + "'");
            b0 = b_char(j);
        } catch (const std::logic_error&) {
            throw UsageError("bad B<j> index in '" + name + "'");
        }
    } else if (name.rfind("psi:", 0) == 0) {
        b0 = named_psi(name.substr(4));
    }

    if (b0) {
        const Rat beta = twist_arg ? parse_rat_arg(*twist_arg) : working_twist();
        const B0Char c = b0->twist(beta);
        if (g.json) {
            Json j;
            j["class"] = name;
            j["variety"] = "P3";
            j["char"] = to_json(c);
            out << j.dump(2) << '\n';
        } else {
            out << format_char(c, g.decimal) << '\n';
        }
        return kExitOk;
    }

    if (twist_arg)
        throw UsageError("--twist only applies to B<j> and psi:<expr> characters");
    const auto k = named_kclass(name);
    if (!k)
        throw UsageError("unknown class '" + name + "'");
    if (g.json)
        out << kclass_json(name, *k).dump(2) << '\n';
    else
        out << format_kclass(*k, g.decimal) << '\n';
    return kExitOk;
}

int cmd_pairing(const std::string& a, const std::string& b, const GlobalFlags& g, std::ostream& out)
{
    const auto ka = named_kclass(a);
    const auto kb = named_kclass(b);
    if (!ka)
        throw UsageError("unknown class '" + a + "'");
    if (!kb)
        throw UsageError("unknown class '" + b + "'");
    const Rat chi = euler_pairing(*ka, *kb);
    const Rat mukai = mukai_pairing(*ka, *kb);
    if (g.json) {
        Json j;
        j["a"] = a;
        j["b"] = b;
        j["euler"] = to_json(chi);
        j["mukai"] = to_json(mukai);
        out << j.dump(2) << '\n';
    } else {
        out << "chi(" << a << ", " << b << ") = " << format_rat(chi, g.decimal) << '\n';
        out << "(" << a << ", " << b << ") = " << format_rat(mukai, g.decimal) << '\n';
    }
    return kExitOk;
}

void print_wall_table(const std::vector<WallSolution>& walls, bool decimal, std::ostream& out)
{
    out << "alpha^2\talpha~\t(a,b,c)\tsub\tquot\n";
    for (const auto& w : walls) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", alpha_approx(w.alpha_sq));
        out << format_rat(w.alpha_sq, decimal) << '\t' << buf << "~\t(" << w.coeffs[0] << ", " << w.coeffs[1]
            << ", " << w.coeffs[2] << ")\t" << format_char(w.sub, decimal) << '\t' << format_char(w.quot, decimal)
            << '\n';
    }
}

int cmd_walls(const std::optional<std::string>& target_arg, const std::optional<std::string>& coords_arg,
              std::int64_t rank_step, bool non_strict, const GlobalFlags& g, std::ostream& out)
{
    if (target_arg.has_value() == coords_arg.has_value())
        throw UsageError("walls needs exactly one of --target=rk,c1,c2 or --coords=x,y,z");
    WallProblem p{b0_char(0, 0, 0)};
    p.rank_step = rank_step;
    p.strict_subobject_slope = !non_strict;
    if (target_arg) {
        const auto v = parse_rat_list(*target_arg, 3, "--target");
        p.target = b0_char(v[0], v[1], v[2]);
    } else {
        const auto v = parse_rat_list(*coords_arg, 3, "--coords");
        for (const auto& x : v)
            if (!x.is_integer())
                throw UsageError("--coords must be integers");
        const auto& b = p.basis.vectors();
        p.target = v[0] * b[0] + v[1] * b[1] + v[2] * b[2];
    }

    const WallReport report = enumerate_walls_report(p, {g.jobs});
    if (g.json) {
        out << walls_to_json(p.target, report, non_strict).dump(2) << '\n';
        return kExitOk;
    }
    out << "target " << format_char(p.target, g.decimal) << " at beta = " << p.beta << ": " << report.walls.size()
        << " wall(s)\n";
    print_wall_table(report.walls, g.decimal, out);
    if (non_strict) {
        out << "boundary splits (rk/ch1 equal to the target's): " << report.boundary.size() << '\n';
        if (!report.boundary.empty())
            print_wall_table(report.boundary, g.decimal, out);
    }
    return kExitOk;
}

int cmd_verify(const std::optional<std::string>& only, const GlobalFlags& g, std::ostream& out)
{
    VerifyReport r;
    try {
        r = run_verify(only);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (g.json)
        out << to_json(r).dump(2) << '\n';
    else
        out << format_report(r);
    return r.ok() ? kExitOk : kExitFailure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact numerics for Kuznetsov components of cubic fourfolds and tilt-stability walls", "kunum"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_flag("--decimal", g.decimal, "Append ~decimal approximations to exact values");
    app.add_option("--jobs", g.jobs, "Worker threads for wall enumeration")->check(CLI::Range(1u, 256u));

    std::string chern_name;
    std::optional<std::string> twist_arg;
    auto* chern = app.add_subcommand("chern", "Print the Chern character of a named class");
    chern->add_option("class", chern_name,
                      "lambda1, lambda2, 2l1+2l2, l1+l2, p_ell, e_gamma, e_c, O(k), B<j>, psi:<a>,<b>")
        ->required();
    chern->add_option("--twist", twist_arg, "Twist beta for B0-module characters (default -1)");

    std::string pair_a, pair_b;
    auto* pairing = app.add_subcommand("pairing", "Euler and Mukai pairings of two classes on Y");
    pairing->add_option("classA", pair_a)->required();
    pairing->add_option("classB", pair_b)->required();

    std::optional<std::string> target_arg, coords_arg;
    std::int64_t rank_step = 4;
    bool non_strict = false;
    auto* walls = app.add_subcommand("walls", "Enumerate numerical walls at beta = -1");
    walls->add_option("--target", target_arg, "Target character rk,c1,c2 at beta = -1");
    walls->add_option("--coords", coords_arg, "Target as integer coordinates in the standard basis");
    walls->add_option("--rank-step", rank_step, "Rank divisibility of sub-objects")->check(CLI::PositiveNumber);
    walls->add_flag("--non-strict", non_strict, "Allow equality in the subobject inequality; report boundary hits");

    std::optional<std::string> only;
    auto* verify = app.add_subcommand("verify", "Run the regression table of published values");
    verify->add_option("--only", only, "Restrict to one group");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (chern->parsed())
            return cmd_chern(chern_name, twist_arg, g, out);
        if (pairing->parsed())
            return cmd_pairing(pair_a, pair_b, g, out);
        if (walls->parsed())
            return cmd_walls(target_arg, coords_arg, rank_step, non_strict, g, out);
        if (verify->parsed())
            return cmd_verify(only, g, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IntegralityError& e) {
        err << "IntegralityError: " << e.what() << '\n';
        return kExitDomain;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}

} // namespace kunum
