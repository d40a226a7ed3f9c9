#include "kunum/intersection_ring.hpp"

#include "kunum/errors.hpp"

#include <string>

namespace kunum {

VarietyId VarietyId::of(Variety v)
{
    switch (v) {
    case Variety::P3:
        return {v, 3, 1};
    case Variety::P5:
        return {v, 5, 1};
    case Variety::CubicFourfold:
        return {v, 4, 3};
    }
    throw std::invalid_argument("unknown variety");
}

std::string_view VarietyId::label() const
{
    switch (name) {
    case Variety::P3:
        return "P3";
    case Variety::P5:
        return "P5";
    case Variety::CubicFourfold:
        return "Y";
    }
    return "?";
}

GradedClass::GradedClass(VarietyId v)
    : variety_(v), coeffs_(static_cast<std::size_t>(v.dim + 1))
{
}

GradedClass::GradedClass(VarietyId v, std::vector<Rat> coeffs)
    : variety_(v), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != static_cast<std::size_t>(v.dim + 1))
        throw std::invalid_argument("graded class on " + std::string(v.label()) + " needs "
                                    + std::to_string(v.dim + 1) + " coefficients, got "
                                    + std::to_string(coeffs_.size()));
}

GradedClass::GradedClass(VarietyId v, std::initializer_list<Rat> coeffs)
    : GradedClass(v, std::vector<Rat>(coeffs))
{
}

GradedClass GradedClass::one(VarietyId v)
{
    return monomial(v, 0);
}

GradedClass GradedClass::monomial(VarietyId v, int k, const Rat& coeff)
{
    GradedClass g(v);
    if (k < 0)
        throw std::invalid_argument("negative degree");
    if (k <= v.dim)
        g.coeffs_[static_cast<std::size_t>(k)] = coeff;
    return g;
}

bool GradedClass::is_zero() const
{
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

void GradedClass::require_same(const GradedClass& o, const char* what) const
{
    if (!(variety_ == o.variety_))
        throw VarietyMismatch(std::string(what) + ": classes live on " + std::string(variety_.label())
                              + " and " + std::string(o.variety_.label()));
}

GradedClass& GradedClass::operator+=(const GradedClass& o)
{
    require_same(o, "add");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o)
{
    require_same(o, "subtract");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    return *this;
}

GradedClass& GradedClass::operator*=(const Rat& s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

GradedClass mul(const GradedClass& a, const GradedClass& b)
{
    a.require_same(b, "multiply");
    GradedClass r(a.variety_);
    const std::size_t n = a.coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

bool operator==(const GradedClass& a, const GradedClass& b)
{
    return a.variety_ == b.variety_ && a.coeffs_ == b.coeffs_;
}

Rat integrate(const GradedClass& a)
{
    return a[a.dim()] * Rat(a.variety().h_top);
}

GradedClass exp_class(VarietyId v, const Rat& k)
{
    std::vector<Rat> c(static_cast<std::size_t>(v.dim + 1));
    Rat term(1);
    for (int n = 0; n <= v.dim; ++n) {
        if (n > 0)
            term = term * k / Rat(n);
        c[static_cast<std::size_t>(n)] = term;
    }
    return GradedClass(v, std::move(c));
}

GradedClass dual_ch(const GradedClass& a)
{
    std::vector<Rat> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t k = 1; k < c.size(); k += 2)
        c[k] = -c[k];
    return GradedClass(a.variety(), std::move(c));
}

GradedClass inverse_unital(const GradedClass& a)
{
    if (a[0] != Rat(1))
        throw DomainError("series inverse needs degree-0 coefficient 1");
    // (1 + x)^{-1} = sum (-x)^n; x is nilpotent of order dim+1.
    const VarietyId v = a.variety();
    const GradedClass x = a - GradedClass::one(v);
    GradedClass result = GradedClass::one(v);
    GradedClass power = GradedClass::one(v);
    for (int n = 1; n <= v.dim; ++n) {
        power = power * (-x);
        result += power;
    }
    return result;
}

GradedClass tangent_chern(VarietyId v)
{
    const GradedClass one_plus_h = GradedClass::one(v) + GradedClass::monomial(v, 1);
    GradedClass c = GradedClass::one(v);
    switch (v.name) {
    case Variety::P3:
    case Variety::P5:
        for (int i = 0; i <= v.dim; ++i)
            c = c * one_plus_h;
        return c;
    case Variety::CubicFourfold: {
        // T_P5|_Y modulo the normal bundle O_Y(3H).
        for (int i = 0; i < 6; ++i)
            c = c * one_plus_h;
        const GradedClass normal = GradedClass::one(v) + GradedClass::monomial(v, 1, Rat(3));
        return c * inverse_unital(normal);
    }
    }
    throw std::invalid_argument("unknown variety");
}

GradedClass todd_from_chern(const GradedClass& c)
{
    const VarietyId v = c.variety();
    if (c[0] != Rat(1))
        throw DomainError("Todd class needs a total Chern class with degree-0 part 1");
    if (v.dim > 4)
        throw DomainError("Todd polynomials are only implemented through degree 4");

    auto coeff = [&](int k) { return k <= v.dim ? c[k] : Rat(0); };
    const Rat c1 = coeff(1), c2 = coeff(2), c3 = coeff(3), c4 = coeff(4);

    const Rat t[5] = {
        Rat(1),
        c1 / Rat(2),
        (c1 * c1 + c2) / Rat(12),
        c1 * c2 / Rat(24),
        (-(c1 * c1 * c1 * c1) + Rat(4) * c1 * c1 * c2 + Rat(3) * c2 * c2 + c1 * c3 - c4) / Rat(720),
    };
    std::vector<Rat> out(t, t + v.dim + 1);
    return GradedClass(v, std::move(out));
}

GradedClass todd_class(VarietyId v)
{
    return todd_from_chern(tangent_chern(v));
}

Rat hrr_euler_characteristic(const GradedClass& ch)
{
    return integrate(ch * todd_class(ch.variety()));
}

} // namespace kunum
