#include "kunum/wall_engine.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

namespace kunum {

namespace {

struct Target {
    Rat rk, c1, c2;
};

Target target_at(const WallProblem& p)
{
    const B0Char t = p.target.twist(p.beta);
    return {t.rk, t.c1, t.c2};
}

// Half-open/closed interval on the rational line.
struct Interval {
    std::optional<Rat> lo, hi;
    bool lo_open = false, hi_open = false;

    void raise_lo(const Rat& v, bool open)
    {
        if (!lo || v > *lo || (v == *lo && open)) {
            lo = v;
            lo_open = open;
        }
    }
    void lower_hi(const Rat& v, bool open)
    {
        if (!hi || v < *hi || (v == *hi && open)) {
            hi = v;
            hi_open = open;
        }
    }
    // Adds the constraint coef * x + rhs >= 0 (or > 0 when strict).
    void add_linear(const Rat& coef, const Rat& rhs, bool strict)
    {
        if (coef.is_zero()) {
            if (rhs.sign() < 0 || (strict && rhs.is_zero()))
                empty = true;
            return;
        }
        const Rat root = -rhs / coef;
        if (coef.sign() > 0)
            raise_lo(root, strict);
        else
            lower_hi(root, strict);
    }
    bool empty = false;
};

// Multiples of `step` inside [lo, hi] after scaling the interval by `widen`.
std::vector<Rat> grid_points(Rat lo, Rat hi, const Rat& step, const Rat& widen)
{
    std::vector<Rat> out;
    if (widen != Rat(1)) {
        const Rat mid = (lo + hi) / Rat(2);
        const Rat half = (hi - lo) / Rat(2) * widen + step * widen;
        lo = mid - half;
        hi = mid + half;
    }
    if (lo > hi)
        return out;
    const mpz_class first = (lo / step).ceil();
    const mpz_class last = (hi / step).floor();
    for (mpz_class k = first; k <= last; ++k)
        out.push_back(Rat(k) * step);
    return out;
}

std::optional<Rat> equal_slope_alpha_sq(const SlopePoly& s, const SlopePoly& q)
{
    const Rat dq = s.alpha_sq_coeff - q.alpha_sq_coeff;
    const Rat dc = q.constant - s.constant;
    if (dq.is_zero())
        return std::nullopt;
    const Rat t = dc / dq;
    if (t.sign() <= 0)
        return std::nullopt;
    return t;
}

bool sorted_before(const WallSolution& x, const WallSolution& y)
{
    if (x.alpha_sq != y.alpha_sq)
        return x.alpha_sq > y.alpha_sq;
    return x.coeffs < y.coeffs;
}

struct Cell {
    Rat rk;
    Rat c1;
};

} // namespace

std::optional<Rat> solve_alpha_sq(const B0Char& v1, const B0Char& v2, const Rat& beta)
{
    return equal_slope_alpha_sq(slope_mu_poly(v1, beta), slope_mu_poly(v2, beta));
}

std::pair<Rat, Rat> projection_steps(const LatticeBasis& basis, const Rat& beta)
{
    Rat g1, g2;
    const LatticeBasis twisted = basis.at_twist(beta);
    for (const auto& v : twisted.vectors()) {
        g1 = rational_gcd(g1, v.c1);
        g2 = rational_gcd(g2, v.c2);
    }
    return {g1, g2};
}

void validate_problem(const WallProblem& p)
{
    if (p.rank_step <= 0)
        throw DomainError("rank_step must be positive");
    lattice_coords(p.target, p.basis);
    const Target t = target_at(p);
    if (t.c1.sign() <= 0)
        throw DomainError("target must have ch1 > 0 at beta = " + p.beta.str() + ", got " + t.c1.str());
}

RankWindow rank_window(const WallProblem& p)
{
    const Target t = target_at(p);
    const auto [g1, g2] = projection_steps(p.basis, p.beta);
    const Rat& R = t.rk;
    const Rat& C = t.c1;
    const Rat& D = t.c2;
    const Rat floor_rank = std::max(Rat(0), R);

    std::optional<Rat> lo, hi;
    for (const Rat& b : grid_points(g1, C - g1, g1, Rat(1))) {
        if (b.sign() <= 0 || b >= C)
            continue;
        // (d): rk(sub) > R b / C.
        const Rat r_lo = R * b / C;
        // (c) forces ch2(sub) > D b / C. For rk(sub) > max(0, R):
        //   D > 0: discriminant(sub) >= 0 gives rk(sub) < b C / (2D);
        //   D < 0: discriminant(quot) >= 0 gives rk(sub) < R + C (C - b) / (-2D);
        //   D = 0: ch2(sub) >= g2 and discriminant(sub) give rk(sub) <= b^2 / (2 g2).
        Rat r_hi;
        if (D.sign() > 0)
            r_hi = b * C / (Rat(2) * D);
        else if (D.sign() < 0)
            r_hi = R + C * (C - b) / (Rat(-2) * D);
        else
            r_hi = b * b / (Rat(2) * g2);
        r_hi = std::max(r_hi, floor_rank);
        if (!lo || r_lo < *lo)
            lo = r_lo;
        if (!hi || r_hi > *hi)
            hi = r_hi;
    }
    if (!lo)
        return {Rat(1), Rat(0)};
    return {*lo, *hi};
}

WallSolution solution_from_coeffs(const WallProblem& p, const std::array<std::int64_t, 3>& coeffs,
                                  const Rat& alpha_sq)
{
    const auto [g1, g2] = projection_steps(p.basis, p.beta);
    const B0Char sub{Rat(static_cast<long>(coeffs[0] * p.rank_step)), g1 * Rat(static_cast<long>(coeffs[1])),
                     g2 * Rat(static_cast<long>(coeffs[2])), p.beta};
    const B0Char target = p.target.twist(p.beta);
    return {alpha_sq, sub, target - sub, coeffs};
}

namespace {

// Exact acceptance test shared by the enumerator. `boundary` reports
// whether condition (d) holds with equality.
std::optional<WallSolution> accept(const WallProblem& p, const Target& t, const Rat& g1, const Rat& g2,
                                   const Rat& r, const Rat& b, const Rat& d, bool& boundary)
{
    const B0Char sub{r, b, d, p.beta};
    const B0Char quot{t.rk - r, t.c1 - b, t.c2 - d, p.beta};
    if (b.sign() <= 0 || quot.c1.sign() <= 0)
        return std::nullopt;
    if (discriminant(sub).sign() < 0 || discriminant(quot).sign() < 0)
        return std::nullopt;
    if (!in_lattice(sub, p.basis))
        return std::nullopt;
    const Rat lhs = r * t.c1;
    const Rat rhs = t.rk * b;
    boundary = lhs == rhs;
    if (lhs < rhs || (boundary && p.strict_subobject_slope))
        return std::nullopt;
    const auto alpha = equal_slope_alpha_sq(slope_mu_poly(sub, p.beta), slope_mu_poly(quot, p.beta));
    if (!alpha)
        return std::nullopt;
    WallSolution s{*alpha, sub, quot,
                   {(r / Rat(static_cast<long>(p.rank_step))).to_int64(), (b / g1).to_int64(),
                    (d / g2).to_int64()}};
    return s;
}

} // namespace

WallReport enumerate_walls_report(const WallProblem& p, const EnumerateOptions& opts)
{
    validate_problem(p);
    const Target t = target_at(p);
    const auto [g1, g2] = projection_steps(p.basis, p.beta);
    const Rat step(static_cast<long>(p.rank_step));
    const RankWindow window = rank_window(p);

    std::vector<Cell> cells;
    for (const Rat& r : grid_points(window.min_rank, window.max_rank, step, opts.widen))
        for (const Rat& b : grid_points(g1, t.c1 - g1, g1, Rat(1)))
            if (b.sign() > 0 && b < t.c1)
                cells.push_back({r, b});

    auto solve_cell = [&](const Cell& cell, WallReport& out) {
        const Rat& r = cell.rk;
        const Rat& b = cell.c1;
        // (d) in cross-multiplied form; equality is the boundary case.
        const int side = (r * t.c1 - t.rk * b).sign();
        if (side < 0 || (side == 0 && p.strict_subobject_slope))
            return;
        Interval iv;
        // (a) for sub: b^2 - 2 r d >= 0.
        iv.add_linear(Rat(-2) * r, b * b, false);
        // (a) for quot: (C - b)^2 - 2 (R - r)(D - d) >= 0.
        iv.add_linear(Rat(2) * (t.rk - r), (t.c1 - b) * (t.c1 - b) - Rat(2) * (t.rk - r) * t.c2, false);
        // (c): alpha^2 = 2 (d C - D b) / (r C - R b) > 0; on the boundary the
        // slopes differ by a constant, so no finite interval exists there.
        if (side > 0)
            iv.add_linear(t.c1, -t.c2 * b, true);
        if (iv.empty || !iv.lo || !iv.hi)
            return;
        for (const Rat& d : grid_points(*iv.lo, *iv.hi, g2, opts.widen)) {
            bool boundary = false;
            if (auto s = accept(p, t, g1, g2, r, b, d, boundary))
                (boundary ? out.boundary : out.walls).push_back(std::move(*s));
        }
    };

    WallReport report;
    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1 || cells.size() < 2) {
        for (const auto& cell : cells)
            solve_cell(cell, report);
    } else {
        std::vector<WallReport> partial(jobs);
        {
            std::vector<std::jthread> workers;
            for (unsigned w = 0; w < jobs; ++w)
                workers.emplace_back([&, w] {
                    for (std::size_t i = w; i < cells.size(); i += jobs)
                        solve_cell(cells[i], partial[w]);
                });
        }
        for (auto& part : partial) {
            report.walls.insert(report.walls.end(), part.walls.begin(), part.walls.end());
            report.boundary.insert(report.boundary.end(), part.boundary.begin(), part.boundary.end());
        }
    }
    std::sort(report.walls.begin(), report.walls.end(), sorted_before);
    std::sort(report.boundary.begin(), report.boundary.end(), sorted_before);
    return report;
}

std::vector<WallSolution> enumerate_walls(const WallProblem& p, const EnumerateOptions& opts)
{
    return enumerate_walls_report(p, opts).walls;
}

bool check_solution(const WallProblem& p, const WallSolution& s)
{
    if (s.alpha_sq.sign() <= 0)
        return false;
    const B0Char target = p.target.twist(p.beta);
    const B0Char sub = s.sub.twist(p.beta);
    const B0Char quot = s.quot.twist(p.beta);
    if (!same_class(sub + quot, target))
        return false;
    // (a)
    if (discriminant(sub).sign() < 0 || discriminant(quot).sign() < 0)
        return false;
    // (b)
    if (!in_lattice(sub, p.basis) || !in_lattice(quot, p.basis))
        return false;
    const Rat step(static_cast<long>(p.rank_step));
    if (!(sub.rk / step).is_integer())
        return false;
    const auto [g1, g2] = projection_steps(p.basis, p.beta);
    const std::array<Rat, 3> expected = {sub.rk / step, sub.c1 / g1, sub.c2 / g2};
    for (std::size_t i = 0; i < 3; ++i)
        if (expected[i] != Rat(static_cast<long>(s.coeffs[i])))
            return false;
    // (c)
    if (sub.c1.sign() <= 0 || quot.c1.sign() <= 0)
        return false;
    const SlopePoly mu_sub = slope_mu_poly(sub, p.beta);
    const SlopePoly mu_quot = slope_mu_poly(quot, p.beta);
    if (mu_sub == mu_quot || mu_sub(s.alpha_sq) != mu_quot(s.alpha_sq))
        return false;
    // (d)
    const Rat sub_ratio = sub.rk / sub.c1;
    const Rat target_ratio = target.rk / target.c1;
    if (p.strict_subobject_slope ? !(sub_ratio > target_ratio) : !(sub_ratio >= target_ratio))
        return false;
    return true;
}

double alpha_approx(const Rat& alpha_sq)
{
    return std::round(std::sqrt(alpha_sq.to_double()) * 1e6) / 1e6;
}

} // namespace kunum
