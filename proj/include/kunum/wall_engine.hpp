#pragma once

#include "kunum/clifford_char.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace kunum {

/// Search for numerical walls of a fixed character along the vertical line
/// beta = const of tilt stability.
///
/// A wall is a split target = sub + quot with
///   (a) discriminant(sub) >= 0 and discriminant(quot) >= 0,
///   (b) sub in the lattice spanned by `basis`, rk(sub) a multiple of
///       `rank_step`,
///   (c) 0 < ch1(sub) < ch1(target) and a unique alpha^2 > 0 at which the
///       two tilt slopes agree,
///   (d) rk(sub)/ch1(sub) > rk(target)/ch1(target) (or >= when
///       strict_subobject_slope is false).
struct WallProblem {
    B0Char target;
    LatticeBasis basis = LatticeBasis::standard();
    std::int64_t rank_step = 4;
    Rat beta = working_twist();
    bool strict_subobject_slope = true;

    static WallProblem for_target(const B0Char& target) { return WallProblem{target}; }
};

/// coeffs = (a, b, c) with sub = (rank_step * a, g1 * b, g2 * c), where g1
/// and g2 generate the ch1 and ch2 projections of the lattice. For the
/// standard basis at beta = -1 this is sub = (4a, b, c/8).
struct WallSolution {
    Rat alpha_sq;
    B0Char sub;
    B0Char quot;
    std::array<std::int64_t, 3> coeffs;

    friend bool operator==(const WallSolution&, const WallSolution&) = default;
};

struct WallReport {
    std::vector<WallSolution> walls;
    /// Splits with rk(sub)/ch1(sub) exactly equal to rk/ch1 of the target.
    /// Only populated for the non-strict variant and never merged into walls.
    std::vector<WallSolution> boundary;
};

/// Inclusive range of sub-object ranks that can possibly carry a wall.
struct RankWindow {
    Rat min_rank;
    Rat max_rank;
};

struct EnumerateOptions {
    /// Worker threads over (rank, ch1) cells; output order does not depend on it.
    unsigned jobs = 1;
    /// Scales every derived search interval about its centre; values > 1
    /// only add candidates that are then rejected by the exact checks.
    Rat widen = Rat(1);
};

/// The unique alpha^2 > 0 where the two slopes agree, if any. Throws
/// NotInHeart unless both ch1 at `beta` are positive.
std::optional<Rat> solve_alpha_sq(const B0Char& v1, const B0Char& v2, const Rat& beta = working_twist());

/// Lattice steps (g1, g2) of the ch1 and ch2 projections of the basis at `beta`.
std::pair<Rat, Rat> projection_steps(const LatticeBasis& basis, const Rat& beta);

/// Necessary window for rk(sub) derived from conditions (a), (c), (d).
RankWindow rank_window(const WallProblem& p);

/// Validates the problem (integral target, ch1 > 0, rank_step > 0); throws
/// IntegralityError or DomainError.
void validate_problem(const WallProblem& p);

/// All walls, sorted by descending alpha^2 then lexicographic coeffs.
WallReport enumerate_walls_report(const WallProblem& p, const EnumerateOptions& opts = {});
std::vector<WallSolution> enumerate_walls(const WallProblem& p, const EnumerateOptions& opts = {});

/// Rebuilds a candidate solution from (a, b, c) and alpha^2.
WallSolution solution_from_coeffs(const WallProblem& p, const std::array<std::int64_t, 3>& coeffs,
                                  const Rat& alpha_sq);

/// Independent re-check of every wall condition using only character
/// primitives.
bool check_solution(const WallProblem& p, const WallSolution& s);

/// Display-only square root of alpha^2 rounded to 6 decimals.
double alpha_approx(const Rat& alpha_sq);

} // namespace kunum
