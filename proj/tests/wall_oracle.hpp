#pragma once

// Brute-force wall search over a fixed box of sub-characters
// (4a, b, c/8). Uses only character primitives: no interval derivation and
// no closed form for alpha^2. Standard basis at beta = -1 only.

#include "kunum/wall_engine.hpp"

#include <algorithm>
#include <vector>

namespace kunum::testing {

struct OracleBox {
    long a_min = -5, a_max = 5;
    long c_min = -500, c_max = 500;
};

struct OracleResult {
    std::vector<WallSolution> walls;
    std::vector<WallSolution> boundary;
};

inline OracleResult brute_force_walls(const B0Char& target_in, bool strict, const OracleBox& box = {})
{
    const B0Char target = target_in.twist(-1);
    const LatticeBasis basis = LatticeBasis::standard();
    OracleResult out;
    for (long a = box.a_min; a <= box.a_max; ++a)
        for (long b = 1; Rat(b) < target.c1; ++b) {
            // rk(sub)/ch1(sub) against rk/ch1 of the target, both ch1 > 0.
            const Rat lhs = Rat(4 * a, b);
            const Rat rhs = target.rk / target.c1;
            if (lhs < rhs || (strict && lhs == rhs))
                continue;
            for (long c = box.c_min; c <= box.c_max; ++c) {
                const B0Char sub = b0_char(4 * a, b, Rat(c, 8));
                const B0Char quot = target - sub;
                if (discriminant(sub).sign() < 0 || discriminant(quot).sign() < 0)
                    continue;
                if (!in_lattice(sub, basis))
                    continue;
                const SlopePoly ms = slope_mu_poly(sub, -1);
                const SlopePoly mq = slope_mu_poly(quot, -1);
                if (ms.alpha_sq_coeff == mq.alpha_sq_coeff)
                    continue;
                const Rat t = (mq.constant - ms.constant) / (ms.alpha_sq_coeff - mq.alpha_sq_coeff);
                if (t.sign() <= 0 || ms(t) != mq(t))
                    continue;
                WallSolution s{t, sub, quot, {a, b, c}};
                (lhs == rhs ? out.boundary : out.walls).push_back(s);
            }
        }
    auto order = [](const WallSolution& x, const WallSolution& y) {
        return x.alpha_sq != y.alpha_sq ? x.alpha_sq > y.alpha_sq : x.coeffs < y.coeffs;
    };
    std::sort(out.walls.begin(), out.walls.end(), order);
    std::sort(out.boundary.begin(), out.boundary.end(), order);
    return out;
}

/// Lattice-integral targets with |rk| <= 16, 1 <= ch1 <= 10 whose derived
/// rank window fits inside the oracle box, so that the comparison is exact.
template <class Gen>
std::vector<B0Char> random_targets(Gen& g, std::size_t count, const OracleBox& box = {})
{
    std::vector<B0Char> out;
    const LatticeBasis basis = LatticeBasis::standard();
    const auto& v = basis.vectors();
    while (out.size() < count) {
        const long x = g.integer(-4, 4);
        const long c1 = g.integer(1, 10);
        if ((c1 - x) % 2 != 0)
            continue;
        const long y = (c1 - x) / 2;
        const long z = g.integer(-3, 3);
        const B0Char t = Rat(x) * v[0] + Rat(y) * v[1] + Rat(z) * v[2];
        const RankWindow w = rank_window(WallProblem::for_target(t));
        if (w.min_rank < Rat(4 * box.a_min) || w.max_rank > Rat(4 * box.a_max))
            continue;
        out.push_back(t);
    }
    return out;
}

} // namespace kunum::testing
