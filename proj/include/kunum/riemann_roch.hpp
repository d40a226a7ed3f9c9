#pragma once

#include "kunum/intersection_ring.hpp"

#include <array>
#include <cstdint>
#include <utility>

namespace kunum {

/// Numerical K-theory class on the cubic fourfold Y, stored as its Chern
/// character.
class KClass {
public:
    KClass() : ch_(GradedClass::zero(VarietyId::cubic_fourfold())) {}
    /// Throws VarietyMismatch unless `ch` lives on the cubic fourfold.
    explicit KClass(GradedClass ch);
    KClass(std::initializer_list<Rat> coeffs);

    const GradedClass& ch() const { return ch_; }
    Rat rank() const { return ch_[0]; }

    /// (rk, ch1, ch2, ch3, deg ch4): coefficients of 1, H, H^2, H^3 and the
    /// integral of the top part. This is the conventional way of writing
    /// characters on Y, where the last entry is a number of points.
    std::array<Rat, 5> display_tuple() const;
    /// Inverse of display_tuple.
    static KClass from_display_tuple(const std::array<Rat, 5>& t);

    KClass& operator+=(const KClass& o) { ch_ += o.ch_; return *this; }
    KClass& operator-=(const KClass& o) { ch_ -= o.ch_; return *this; }
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
    friend KClass operator-(const KClass& a) { return KClass(-a.ch_); }
    friend KClass operator*(const Rat& s, const KClass& a) { return KClass(s * a.ch_); }

    friend bool operator==(const KClass& a, const KClass& b) { return a.ch_ == b.ch_; }

private:
    GradedClass ch_;
};

/// A sheaf supported on a curve in Y, described by H-degree and Euler
/// characteristic.
struct CurveData {
    std::int64_t degree;
    std::int64_t euler_char;
};

/// td(Y), computed once.
const GradedClass& todd_cubic_fourfold();

/// chi(E, F) = integral of ch(E)^dual ch(F) td(Y).
Rat euler_pairing(const KClass& e, const KClass& f);

/// (E, F) = -chi(E, F).
Rat mukai_pairing(const KClass& e, const KClass& f);

/// [O_Y(kH)].
KClass line_bundle(const Rat& k);

/// Class of the line l = H^3/3 (so H.l = 1).
KClass line_class();
/// Class of a point, H^4/3.
KClass point_class();

/// d*l + x*pt with x fixed by chi(O_Y, class) = euler_char. Throws
/// std::invalid_argument when degree < 1.
KClass curve_class(const CurveData& c);

/// [F] - chi(E, F)[E].
KClass left_mutation(const KClass& e, const KClass& f);
/// [F] - chi(F, E)[E].
KClass right_mutation(const KClass& e, const KClass& f);

/// lambda_i = L_O L_O(H) L_O(2H) [O_L(iH)] for i = 1, 2.
std::pair<KClass, KClass> lambda_classes();

/// R_O(-H) R_O(-2H) L_O applied to f (rightmost first).
KClass project_ku(const KClass& f);
/// L_O R_O(-H) R_O(-2H) applied to f; agrees with project_ku.
KClass project_ku_alternate(const KClass& f);

/// [I_Gamma(H)] for an elliptic quintic Gamma: O_Y(H) minus O_Gamma(H).
KClass ideal_elliptic_quintic_twisted();
/// pr(I_Gamma(H)).
KClass e_gamma_class();
/// pr(O_l[-1]) for a line l.
KClass p_ell_class();
/// 2[O_Y] - [theta_C(H)] - 2[O_Y(-H)] for a smooth conic C.
KClass e_c_class();

} // namespace kunum
