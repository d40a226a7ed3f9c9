#include "kunum/riemann_roch.hpp"

#include "kunum/errors.hpp"

#include <stdexcept>

namespace kunum {

namespace {

constexpr VarietyId kY{Variety::CubicFourfold, 4, 3};

} // namespace

KClass::KClass(GradedClass ch) : ch_(std::move(ch))
{
    if (!(ch_.variety() == kY))
        throw VarietyMismatch("K-class must live on the cubic fourfold, got "
                              + std::string(ch_.variety().label()));
}

KClass::KClass(std::initializer_list<Rat> coeffs) : KClass(GradedClass(kY, coeffs)) {}

std::array<Rat, 5> KClass::display_tuple() const
{
    return {ch_[0], ch_[1], ch_[2], ch_[3], integrate(GradedClass::monomial(kY, 4, ch_[4]))};
}

KClass KClass::from_display_tuple(const std::array<Rat, 5>& t)
{
    return KClass({t[0], t[1], t[2], t[3], t[4] / Rat(kY.h_top)});
}

const GradedClass& todd_cubic_fourfold()
{
    static const GradedClass td = todd_class(kY);
    return td;
}

Rat euler_pairing(const KClass& e, const KClass& f)
{
    return integrate(dual_ch(e.ch()) * f.ch() * todd_cubic_fourfold());
}

Rat mukai_pairing(const KClass& e, const KClass& f)
{
    return -euler_pairing(e, f);
}

KClass line_bundle(const Rat& k)
{
    return KClass(exp_class(kY, k));
}

KClass line_class()
{
    return KClass(GradedClass::monomial(kY, 3, Rat(1, kY.h_top)));
}

KClass point_class()
{
    return KClass(GradedClass::monomial(kY, 4, Rat(1, kY.h_top)));
}

KClass curve_class(const CurveData& c)
{
    if (c.degree < 1)
        throw std::invalid_argument("curve degree must be positive");
    // chi(O_Y, d*l) = d * integral(l * td_1) = (3/2) d, and chi of a point is 1.
    const Rat d(static_cast<long>(c.degree));
    const KClass ell_part = d * line_class();
    const Rat x = Rat(static_cast<long>(c.euler_char)) - euler_pairing(line_bundle(0), ell_part);
    return ell_part + x * point_class();
}

KClass left_mutation(const KClass& e, const KClass& f)
{
    return f - euler_pairing(e, f) * e;
}

KClass right_mutation(const KClass& e, const KClass& f)
{
    return f - euler_pairing(f, e) * e;
}

std::pair<KClass, KClass> lambda_classes()
{
    auto lambda = [](long i) {
        // O_L(iH) on a line L: degree 1, chi = i + 1.
        const KClass o_line = curve_class({1, i + 1});
        return left_mutation(line_bundle(0),
                             left_mutation(line_bundle(1), left_mutation(line_bundle(2), o_line)));
    };
    return {lambda(1), lambda(2)};
}

KClass project_ku(const KClass& f)
{
    return right_mutation(line_bundle(-1),
                          right_mutation(line_bundle(-2), left_mutation(line_bundle(0), f)));
}

KClass project_ku_alternate(const KClass& f)
{
    return left_mutation(line_bundle(0),
                         right_mutation(line_bundle(-1), right_mutation(line_bundle(-2), f)));
}

KClass ideal_elliptic_quintic_twisted()
{
    // chi(O_Gamma(mH)) = 5m, so O_Gamma(H) has degree 5 and chi 5.
    return line_bundle(1) - curve_class({5, 5});
}

KClass e_gamma_class()
{
    return project_ku(ideal_elliptic_quintic_twisted());
}

KClass p_ell_class()
{
    return project_ku(-curve_class({1, 1}));
}

KClass e_c_class()
{
    // theta_C(H) is O_{P^1}(1) on the conic: degree 2, chi 2.
    return Rat(2) * line_bundle(0) - curve_class({2, 2}) - Rat(2) * line_bundle(-1);
}

} // namespace kunum
