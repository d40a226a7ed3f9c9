#pragma once

#include "kunum/errors.hpp"
#include "kunum/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

namespace kunum {

/// Twist at which characters are normally expressed.
inline Rat working_twist() { return Rat(-1); }

/// Modified Chern character (rk, ch_1, ch_2) of a B0-module on P3,
/// expressed at twist `beta`, i.e. the truncation of exp(-beta h) ch_B0.
struct B0Char {
    Rat rk;
    Rat c1;
    Rat c2;
    Rat beta;

    /// Same underlying class re-expressed at `beta_new`.
    B0Char twist(const Rat& beta_new) const;
    B0Char at_working_twist() const { return twist(working_twist()); }

    /// Both operands are brought to this->beta before adding.
    B0Char operator+(const B0Char& o) const;
    B0Char operator-(const B0Char& o) const;
    B0Char operator-() const { return {-rk, -c1, -c2, beta}; }
    friend B0Char operator*(const Rat& s, const B0Char& c) { return {s * c.rk, s * c.c1, s * c.c2, c.beta}; }

    /// Componentwise equality including the twist.
    friend bool operator==(const B0Char&, const B0Char&) = default;
};

/// True when a and b describe the same class (possibly at different twists).
bool same_class(const B0Char& a, const B0Char& b);

/// Convenience constructor for a character at the working twist.
inline B0Char b0_char(Rat rk, Rat c1, Rat c2) { return {std::move(rk), std::move(c1), std::move(c2), working_twist()}; }

/// One summand O(twist)^{multiplicity} of the underlying O-module.
struct BundleSummand {
    std::int64_t multiplicity;
    std::int64_t twist;
};

/// Coefficient of the line class in the modification factor (1 - 11/32 l).
inline Rat modification_constant() { return Rat(11, 32); }

/// Character at beta = 0 of a module whose underlying sheaf is the given
/// sum of line bundles.
B0Char char_from_bundle(std::span<const BundleSummand> summands);

B0Char twist(const B0Char& c, const Rat& beta_new);

/// Character of B_j (B_{2k} = B0(k), B_{2k+1} = B1(k)) at the working twist.
B0Char b_char(std::int64_t j);

/// ch_1^2 - 2 rk ch_2; independent of the twist.
Rat discriminant(const B0Char& c);

class TiltParams {
public:
    /// Throws DomainError unless alpha_sq > 0.
    TiltParams(Rat alpha_sq, Rat beta);

    const Rat& alpha_sq() const { return alpha_sq_; }
    const Rat& beta() const { return beta_; }

private:
    Rat alpha_sq_;
    Rat beta_;
};

/// Affine function constant + alpha_sq_coeff * alpha^2.
struct SlopePoly {
    Rat constant;
    Rat alpha_sq_coeff;

    Rat operator()(const Rat& alpha_sq) const { return constant + alpha_sq_coeff * alpha_sq; }
    friend bool operator==(const SlopePoly&, const SlopePoly&) = default;
};

/// Tilt slope: either a finite rational or +infinity.
class TiltSlope {
public:
    static TiltSlope infinite() { return TiltSlope(); }
    static TiltSlope finite(Rat v) { TiltSlope s; s.value_ = std::move(v); return s; }

    bool is_infinite() const { return !value_.has_value(); }
    /// Throws std::bad_optional_access when infinite.
    const Rat& value() const { return value_.value(); }

    friend bool operator==(const TiltSlope&, const TiltSlope&) = default;

private:
    TiltSlope() = default;
    std::optional<Rat> value_;
};

/// Raised when a character has negative ch_1 at the tilt twist; the caller
/// is expected to pass the shifted (negated) character instead.
class NotInHeart : public DomainError {
public:
    using DomainError::DomainError;
};

/// Z_{alpha,beta} = i ch1^beta + (alpha^2/2) rk - ch2^beta as (Re, Im).
std::pair<Rat, Rat> central_charge(const B0Char& c, const TiltParams& p);

/// mu = (ch2^beta - alpha^2/2 rk) / ch1^beta, +infinity when ch1^beta = 0.
/// Throws NotInHeart when ch1^beta < 0.
TiltSlope slope_mu(const B0Char& c, const TiltParams& p);

/// Tilt slope as an affine function of alpha^2 at twist `beta`. Throws
/// NotInHeart unless ch1^beta > 0.
SlopePoly slope_mu_poly(const B0Char& c, const Rat& beta);

/// ch1 / rk at beta = 0 (classical slope). Throws DomainError for rk = 0.
Rat classical_slope(const B0Char& c);

/// Reduced central charge ch_1^{-1} - i rk as (Re, Im).
std::pair<Rat, Rat> reduced_Z(const B0Char& c);

/// Numerical shadow of membership in the Kuznetsov component:
/// ch2^{-1} = -7/32 rk.
bool ku_constraint_holds(const B0Char& c);

/// Image of a*lambda_1 + b*lambda_2 at the working twist:
/// a (4, 3, -7/8) + b (-8, 0, 7/4).
B0Char psi_rho_image(const Rat& a, const Rat& b);

/// Thrown when a character is not an integral combination of a basis.
class IntegralityError : public DomainError {
public:
    IntegralityError(const std::string& what, std::array<Rat, 3> coords)
        : DomainError(what), coords_(std::move(coords)) {}
    const std::array<Rat, 3>& coords() const { return coords_; }

private:
    std::array<Rat, 3> coords_;
};

/// Three characters spanning the lattice of admissible (rk, ch1, ch2).
class LatticeBasis {
public:
    /// Throws DomainError when the vectors are linearly dependent.
    explicit LatticeBasis(std::array<B0Char, 3> vectors);

    /// {(4, 1, 1/8), (0, 2, 0), (0, 0, 1)} at the working twist, spanned by
    /// the characters of B_{-1}, B_0, B_1.
    static LatticeBasis standard();

    const std::array<B0Char, 3>& vectors() const { return vectors_; }
    /// All vectors re-expressed at `beta`.
    LatticeBasis at_twist(const Rat& beta) const;

    /// Unique rational solution x with sum x_i v_i = c (after retwisting c).
    std::array<Rat, 3> rational_coords(const B0Char& c) const;

private:
    std::array<B0Char, 3> vectors_;
};

/// Integer coordinates of c in the basis; throws IntegralityError carrying
/// the rational solution otherwise.
std::array<std::int64_t, 3> lattice_coords(const B0Char& c, const LatticeBasis& basis);

/// Whether c lies in the lattice spanned by the basis.
bool in_lattice(const B0Char& c, const LatticeBasis& basis);

} // namespace kunum
