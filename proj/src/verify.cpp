// Regression table: every published value the engine reproduces, stored as
// data next to the computation that regenerates it.

#include "kunum/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace kunum {

namespace {

struct Fixture {
    const char* group;
    const char* name;
    const char* paper_ref;
    const char* expected;
    std::function<std::string()> compute;
};

struct Discrepancy {
    const char* name;
    const char* paper_ref;
    std::vector<std::string> paper_values;
    std::function<std::string()> compute;
};

std::string tuple(std::initializer_list<Rat> v)
{
    return format_tuple(std::span<const Rat>(v.begin(), v.size()));
}

std::string boolean(bool b)
{
    return b ? "true" : "false";
}

std::string solution_line(const WallSolution& s)
{
    return "alpha^2=" + s.alpha_sq.str() + " (a,b,c)=(" + std::to_string(s.coeffs[0]) + ", "
         + std::to_string(s.coeffs[1]) + ", " + std::to_string(s.coeffs[2]) + ")";
}

const B0Char kTarget = b0_char(-8, 6, Rat(7, 4));

const std::vector<WallSolution>& target_walls()
{
    static const std::vector<WallSolution> walls = enumerate_walls(WallProblem::for_target(kTarget));
    return walls;
}

std::string wall_at(std::size_t i)
{
    const auto& w = target_walls();
    return i < w.size() ? solution_line(w[i]) : "missing";
}

const WallSolution* find_wall(std::int64_t a, std::int64_t b, std::int64_t c)
{
    for (const auto& w : target_walls())
        if (w.coeffs == std::array<std::int64_t, 3>{a, b, c})
            return &w;
    return nullptr;
}

std::string wall_pair(std::int64_t a, std::int64_t b, std::int64_t c)
{
    const WallSolution* w = find_wall(a, b, c);
    return w ? format_char(w->sub) + " + " + format_char(w->quot) : "missing";
}

Rat hrr_p3_weight(int k)
{
    // Coefficient of ch_k in chi(F) = integral of ch(F) td(P3).
    return integrate(GradedClass::monomial(VarietyId::p3(), k) * todd_class(VarietyId::p3()));
}

std::vector<Fixture> fixtures()
{
    const auto [l1, l2] = lambda_classes();
    std::vector<Fixture> f;

    // Riemann-Roch on P3 and Y.
    f.push_back({"riemann_roch", "hrr_p3_weights", "Riemann-Roch on P3: chi = ch3 + 2 ch2 + 11/6 ch1 + rk",
                 "(1, 11/6, 2, 1)", [] {
                     return tuple({hrr_p3_weight(0), hrr_p3_weight(1), hrr_p3_weight(2), hrr_p3_weight(3)});
                 }});
    f.push_back({"riemann_roch", "h0_OY_H", "h^0(O_Y(H)) = 6", "6",
                 [] { return euler_pairing(line_bundle(0), line_bundle(1)).str(); }});
    f.push_back({"riemann_roch", "chi_elliptic_quintic", "chi(O_Gamma(mH)) = 5m, m = 1, 2, 3", "(5, 10, 15)", [] {
                     const KClass c = curve_class({5, 5});
                     auto chi = [&](long m) { return euler_pairing(line_bundle(0), KClass(c.ch() * exp_class(VarietyId::cubic_fourfold(), m - 1))); };
                     return tuple({chi(1), chi(2), chi(3)});
                 }});

    // Lambda classes and the projection functor.
    f.push_back({"lambda", "ch_lambda1", "ch(lambda_1) = (3, -H, -H^2/2, H^3/6, 3/8)", "(3, -1, -1/2, 1/6, 3/8)",
                 [l1] { return format_kclass(l1); }});
    f.push_back({"lambda", "ch_lambda2", "ch(lambda_2) = (-3, 2H, 0, -H^3/3, 0)", "(-3, 2, 0, -1/3, 0)",
                 [l2] { return format_kclass(l2); }});
    f.push_back({"lambda", "ch_2lambda1_2lambda2", "ch(2 lambda_1 + 2 lambda_2) = (0, 2H, -H^2, -H^3/3, 3/4)",
                 "(0, 2, -1, -1/3, 3/4)", [l1, l2] { return format_kclass(Rat(2) * l1 + Rat(2) * l2); }});
    f.push_back({"lambda", "mukai_gram", "(l1,l1) = (l2,l2) = 2, (l1,l2) = -1", "(2, -1, -1, 2)", [l1, l2] {
                     return tuple({mukai_pairing(l1, l1), mukai_pairing(l1, l2), mukai_pairing(l2, l1),
                                   mukai_pairing(l2, l2)});
                 }});
    f.push_back({"lambda", "lambda_orthogonal_to_exceptional", "lambda_i orthogonal to O_Y, O_Y(H), O_Y(2H)",
                 "(0, 0, 0, 0, 0, 0)", [l1, l2] {
                     return tuple({euler_pairing(line_bundle(0), l1), euler_pairing(line_bundle(1), l1),
                                   euler_pairing(line_bundle(2), l1), euler_pairing(line_bundle(0), l2),
                                   euler_pairing(line_bundle(1), l2), euler_pairing(line_bundle(2), l2)});
                 }});
    f.push_back({"lambda", "pr_orders_agree", "pr = R_O(-H) R_O(-2H) L_O = L_O R_O(-H) R_O(-2H)", "true", [] {
                     const KClass x = ideal_elliptic_quintic_twisted();
                     const KClass y = -curve_class({1, 1});
                     return boolean(project_ku(x) == project_ku_alternate(x)
                                    && project_ku(y) == project_ku_alternate(y));
                 }});
    f.push_back({"lambda", "ch_E_Gamma", "E_Gamma = pr(I_Gamma(H)) has character 2 lambda_1 + 2 lambda_2",
                 "(0, 2, -1, -1/3, 3/4)", [] { return format_kclass(e_gamma_class()); }});
    f.push_back({"lambda", "ch_P_ell", "P_l = pr(O_l[-1]) has character lambda_1 + lambda_2",
                 "(0, 1, -1/2, -1/6, 3/8)", [] { return format_kclass(p_ell_class()); }});
    f.push_back({"lambda", "v0_square", "(v0, v0) = 2 for v0 = lambda_1 + lambda_2, v = 2 v0", "(2, 8)", [l1, l2] {
                     const KClass v0 = l1 + l2;
                     return tuple({mukai_pairing(v0, v0), mukai_pairing(Rat(2) * v0, Rat(2) * v0)});
                 }});

    // B0-module characters.
    f.push_back({"clifford", "B1_shift", "ch^{-1}(B_1[1]) = (-4, -1, -1/8)", "(-4, -1, -1/8)",
                 [] { return format_char(-b_char(1)); }});
    f.push_back({"clifford", "psi_lambda1", "ch^{-1}(Psi rho^*(lambda_1)) = (4, 3, -7/8)", "(4, 3, -7/8)",
                 [] { return format_char(psi_rho_image(1, 0)); }});
    f.push_back({"clifford", "psi_lambda2", "ch^{-1}(Psi rho^*(lambda_2)) = (-8, 0, 7/4)", "(-8, 0, 7/4)",
                 [] { return format_char(psi_rho_image(0, 1)); }});
    f.push_back({"clifford", "psi_2lambda1_2lambda2", "ch^{-1}(Psi rho^*(2 lambda_1 + 2 lambda_2)) = (-8, 6, 14/8)",
                 "(-8, 6, 7/4)", [] { return format_char(psi_rho_image(2, 2)); }});
    f.push_back({"clifford", "ku_constraint_images", "Ku objects satisfy ch2^{-1} = -7/32 rk", "(true, true)", [] {
                     return "(" + boolean(ku_constraint_holds(psi_rho_image(1, 0))) + ", "
                          + boolean(ku_constraint_holds(psi_rho_image(0, 1))) + ")";
                 }});
    f.push_back({"clifford", "reduced_Z_lambda1", "Z = ch_1^{-1} - i rk on (4, 3, -7/8)", "(3, -4)", [] {
                     const auto z = reduced_Z(psi_rho_image(1, 0));
                     return tuple({z.first, z.second});
                 }});
    f.push_back({"clifford", "reduced_Z_2lambda1_2lambda2", "Z = ch_1^{-1} - i rk on (-8, 6, 7/4)", "(6, 8)", [] {
                     const auto z = reduced_Z(kTarget);
                     return tuple({z.first, z.second});
                 }});

    // Tilt slopes.
    f.push_back({"slopes", "mu_E_Gamma", "mu_{alpha,-1}(E_Gamma) = mu_{alpha,-1}(E_C) = (16 alpha^2 + 7)/24",
                 "7/24 + 2/3*alpha^2", [] { return format_slope(slope_mu_poly(kTarget, working_twist())); }});
    f.push_back({"slopes", "mu_case1_sub", "mu_{alpha,-1}(S) = 1 for ch(S) = (0, 2, 2)", "1",
                 [] { return format_slope(slope_mu_poly(b0_char(0, 2, 2), working_twist())); }});
    f.push_back({"slopes", "mu_case2iii_sub", "mu_{alpha,-1}(S) = 1/2 for ch(S) = (0, 2, 1)", "1/2",
                 [] { return format_slope(slope_mu_poly(b0_char(0, 2, 1), working_twist())); }});
    f.push_back({"slopes", "ku_imaginary_part", "Im(-i Z_{alpha,-1}(E)) = -(7/32 + alpha^2/2) rk(E)",
                 "-7/32 - 1/2*alpha^2", [] {
                     // Im(-iZ) = -Re(Z) = ch2 - alpha^2/2 rk, per unit rank.
                     const B0Char c = psi_rho_image(3, -5);
                     return format_slope(SlopePoly{c.c2 / c.rk, Rat(-1, 2)});
                 }});

    // Wall list for (-8, 6, 7/4).
    f.push_back({"walls", "alpha_sq_case1", "case (1): alpha = sqrt(17)/4 for (0,2,2) + (-8,4,-1/4)", "17/16", [] {
                     return solve_alpha_sq(b0_char(0, 2, 2), b0_char(-8, 4, Rat(-1, 4)))->str();
                 }});
    f.push_back({"walls", "alpha_sq_case3", "case (3): alpha = 1/4 for (4,3,9/8) + (-12,3,5/8)", "1/16", [] {
                     return solve_alpha_sq(b0_char(4, 3, Rat(9, 8)), b0_char(-12, 3, Rat(5, 8)))->str();
                 }});
    f.push_back({"walls", "wall_count", "all solutions of the wall system", "5",
                 [] { return std::to_string(target_walls().size()); }});
    f.push_back({"walls", "wall_1", "case (1): alpha = sqrt(17)/4, a=0, b=2, c=16", "alpha^2=17/16 (a,b,c)=(0, 2, 16)",
                 [] { return wall_at(0); }});
    f.push_back({"walls", "wall_2i", "case (2.i): alpha = sqrt(5)/4, a=-1, b=5, c=15",
                 "alpha^2=5/16 (a,b,c)=(-1, 5, 15)", [] { return wall_at(1); }});
    f.push_back({"walls", "wall_2ii", "case (2.ii): alpha = sqrt(5)/4, a=0, b=4, c=16",
                 "alpha^2=5/16 (a,b,c)=(0, 4, 16)", [] { return wall_at(3); }});
    f.push_back({"walls", "wall_2iii", "case (2.iii): alpha = sqrt(5)/4, a=0, b=2, c=8",
                 "alpha^2=5/16 (a,b,c)=(0, 2, 8)", [] { return wall_at(2); }});
    f.push_back({"walls", "wall_3", "case (3): alpha = 1/4, a=1, b=3, c=9", "alpha^2=1/16 (a,b,c)=(1, 3, 9)",
                 [] { return wall_at(4); }});
    f.push_back({"walls", "case1_characters", "S, Q = (0,2,2), (-8,4,-1/4) in case (1)",
                 "(0, 2, 2) + (-8, 4, -1/4)", [] { return wall_pair(0, 2, 16); }});
    f.push_back({"walls", "case3_characters", "S, Q = (4,3,9/8), (-12,3,5/8) in case (3)",
                 "(4, 3, 9/8) + (-12, 3, 5/8)", [] { return wall_pair(1, 3, 9); }});
    f.push_back({"walls", "case2i_2ii_quotients", "Q = (-4,1,-1/8) or (-8,2,-1/4) in cases (2.i), (2.ii)",
                 "(-4, 1, -1/8) | (-8, 2, -1/4)", [] {
                     const WallSolution* a = find_wall(-1, 5, 15);
                     const WallSolution* b = find_wall(0, 4, 16);
                     if (!a || !b)
                         return std::string("missing");
                     return format_char(a->quot) + " | " + format_char(b->quot);
                 }});
    f.push_back({"walls", "quotient_rank_bound", "-12 <= -8 - 4a <= 0 for every solution", "true", [] {
                     bool ok = !target_walls().empty();
                     for (const auto& w : target_walls())
                         ok = ok && w.quot.rk >= Rat(-12) && w.quot.rk <= Rat(0);
                     return boolean(ok);
                 }});
    f.push_back({"walls", "candidate_pairs", "pairs (a,b) allowed by integrality and the subobject inequality",
                 "(-1,5) (0,2) (0,4) (1,1) (1,3) (1,5)", [] {
                     // Inside the quoted rank range, keep the pairs with an
                     // integral sub-character for some c and 4a/b > -4/3.
                     const WallProblem p = WallProblem::for_target(kTarget);
                     std::string out;
                     for (long a = -2; a <= 1; ++a)
                         for (long b = 1; b <= 5; ++b) {
                             if (!(Rat(4 * a, b) > Rat(-4, 3)))
                                 continue;
                             bool integral = false;
                             for (long c = 0; c < 8 && !integral; ++c)
                                 integral = in_lattice(b0_char(4 * a, b, Rat(c, 8)), p.basis);
                             if (integral)
                                 out += (out.empty() ? "" : " ") + ("(" + std::to_string(a) + "," + std::to_string(b) + ")");
                         }
                     return out;
                 }});
    f.push_back({"walls", "quotient_step_iv_bound", "rk(Q) < 0 and ch2(Q)/rk(Q) >= -3/32 in every case", "true", [] {
                     bool ok = !target_walls().empty();
                     for (const auto& w : target_walls())
                         ok = ok && w.quot.rk.sign() < 0 && w.quot.c2 / w.quot.rk >= Rat(-3, 32);
                     return boolean(ok);
                 }});
    f.push_back({"walls", "rejected_b5_split", "a=1, b=5, c=17 fails: quotient discriminant 1 - 9 = -8", "false (-8)",
                 [] {
                     const WallProblem p = WallProblem::for_target(kTarget);
                     const WallSolution s = solution_from_coeffs(p, {1, 5, 17}, Rat(1, 8));
                     return boolean(check_solution(p, s)) + " (" + discriminant(s.quot).str() + ")";
                 }});
    return f;
}

std::vector<Discrepancy> discrepancies()
{
    std::vector<Discrepancy> d;
    d.push_back({"e_c_character_line",
                 "character of E_C: statement gives 2 lambda_1 + 2 lambda_2, the closing line of its proof gives 2 lambda_1 + lambda_2",
                 {"2 lambda_1 + 2 lambda_2 = (0, 2, -1, -1/3, 3/4)", "2 lambda_1 + lambda_2 = (3, 0, -1, 0, 3/4)"},
                 [] { return format_kclass(e_c_class()); }});
    d.push_back({"mu_B0_shift",
                 "slope of B_0[1] at beta = -1: quoted as 2 alpha^2 + 1/8 and as (4 alpha^2 - 1)/8",
                 {"1/8 + 2*alpha^2", "-1/8 + 1/2*alpha^2"},
                 [] { return format_slope(slope_mu_poly(-b_char(0), working_twist())); }});
    return d;
}

} // namespace

std::string_view to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::PaperInternalDiscrepancy:
        return "paper_internal_discrepancy";
    }
    return "?";
}

std::size_t VerifyReport::count(CheckStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const VerifyCheck& c) { return c.status == s; }));
}

std::vector<std::string> verify_groups()
{
    return {"riemann_roch", "lambda", "clifford", "slopes", "walls", "discrepancy"};
}

VerifyReport run_verify(const std::optional<std::string>& only)
{
    if (only) {
        const auto groups = verify_groups();
        if (std::find(groups.begin(), groups.end(), *only) == groups.end())
            throw std::invalid_argument("unknown verify group '" + *only + "'");
    }
    VerifyReport report;
    for (const auto& f : fixtures()) {
        if (only && *only != f.group)
            continue;
        std::string computed;
        try {
            computed = f.compute();
        } catch (const std::exception& e) {
            computed = std::string("error: ") + e.what();
        }
        const CheckStatus status = computed == f.expected ? CheckStatus::Pass : CheckStatus::Fail;
        report.checks.push_back({f.name, f.group, f.paper_ref, f.expected, computed, status, {}});
    }
    if (!only || *only == "discrepancy") {
        for (const auto& d : discrepancies()) {
            std::string joined;
            for (const auto& v : d.paper_values)
                joined += (joined.empty() ? "" : " | ") + v;
            report.checks.push_back({d.name, "discrepancy", d.paper_ref, joined, d.compute(),
                                     CheckStatus::PaperInternalDiscrepancy, d.paper_values});
        }
    }
    return report;
}

Json to_json(const VerifyReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json j;
        j["name"] = c.name;
        j["group"] = c.group;
        j["paper_ref"] = c.paper_ref;
        j["expected"] = c.expected;
        j["computed"] = c.computed;
        j["status"] = std::string(to_string(c.status));
        if (!c.paper_values.empty())
            j["paper_values"] = c.paper_values;
        checks.push_back(std::move(j));
    }
    Json out;
    out["checks"] = std::move(checks);
    Json summary;
    summary["total"] = r.checks.size();
    summary["pass"] = r.count(CheckStatus::Pass);
    summary["fail"] = r.count(CheckStatus::Fail);
    summary["paper_internal_discrepancy"] = r.count(CheckStatus::PaperInternalDiscrepancy);
    out["summary"] = std::move(summary);
    return out;
}

std::string format_report(const VerifyReport& r)
{
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << '[' << to_string(c.status) << "] " << c.group << '/' << c.name << ": " << c.computed;
        if (c.status == CheckStatus::Fail)
            os << "  (expected " << c.expected << ')';
        if (c.status == CheckStatus::PaperInternalDiscrepancy)
            os << "  (published: " << c.expected << ')';
        os << "\n    ref: " << c.paper_ref << '\n';
    }
    os << r.checks.size() << " checks: " << r.count(CheckStatus::Pass) << " pass, " << r.count(CheckStatus::Fail)
       << " fail, " << r.count(CheckStatus::PaperInternalDiscrepancy) << " paper_internal_discrepancy\n";
    return os.str();
}

} // namespace kunum
