#include "kunum/clifford_char.hpp"

#include <string>

namespace kunum {

B0Char B0Char::twist(const Rat& beta_new) const
{
    // exp(-delta h) with delta = beta_new - beta applied to (rk, c1, c2).
    const Rat delta = beta_new - beta;
    return {rk, c1 - delta * rk, c2 - delta * c1 + rk * delta * delta / Rat(2), beta_new};
}

B0Char B0Char::operator+(const B0Char& o) const
{
    const B0Char t = o.twist(beta);
    return {rk + t.rk, c1 + t.c1, c2 + t.c2, beta};
}

B0Char B0Char::operator-(const B0Char& o) const
{
    return *this + (-o);
}

bool same_class(const B0Char& a, const B0Char& b)
{
    return a == b.twist(a.beta);
}

B0Char char_from_bundle(std::span<const BundleSummand> summands)
{
    Rat rk, c1, ch2;
    for (const auto& s : summands) {
        const Rat m(static_cast<long>(s.multiplicity));
        const Rat k(static_cast<long>(s.twist));
        rk += m;
        c1 += m * k;
        ch2 += m * k * k / Rat(2);
    }
    return {rk, c1, ch2 - modification_constant() * rk, Rat(0)};
}

B0Char twist(const B0Char& c, const Rat& beta_new)
{
    return c.twist(beta_new);
}

B0Char b_char(std::int64_t j)
{
    // Forg(B0) = O + O(-1) + O(-2)^2, Forg(B1) = O^2 + O(-1) + O(-2).
    static constexpr BundleSummand b0[] = {{1, 0}, {1, -1}, {2, -2}};
    static constexpr BundleSummand b1[] = {{2, 0}, {1, -1}, {1, -2}};
    const bool odd = (j % 2) != 0;
    const std::int64_t k = odd ? (j - 1) / 2 : j / 2;
    const auto base = odd ? std::span<const BundleSummand>(b1) : std::span<const BundleSummand>(b0);
    // Tensoring with O(k) multiplies the character by exp(kh), which is the
    // same as re-expressing it at twist -k.
    B0Char c = char_from_bundle(base);
    c = c.twist(Rat(static_cast<long>(-k)));
    c.beta = Rat(0);
    return c.twist(working_twist());
}

Rat discriminant(const B0Char& c)
{
    return c.c1 * c.c1 - Rat(2) * c.rk * c.c2;
}

TiltParams::TiltParams(Rat alpha_sq, Rat beta) : alpha_sq_(std::move(alpha_sq)), beta_(std::move(beta))
{
    if (alpha_sq_.sign() <= 0)
        throw DomainError("alpha^2 must be positive, got " + alpha_sq_.str());
}

std::pair<Rat, Rat> central_charge(const B0Char& c, const TiltParams& p)
{
    const B0Char t = c.twist(p.beta());
    return {p.alpha_sq() * t.rk / Rat(2) - t.c2, t.c1};
}

TiltSlope slope_mu(const B0Char& c, const TiltParams& p)
{
    const B0Char t = c.twist(p.beta());
    if (t.c1.sign() < 0)
        throw NotInHeart("ch1 = " + t.c1.str() + " < 0 at beta = " + p.beta().str()
                         + "; pass the shifted character");
    if (t.c1.is_zero())
        return TiltSlope::infinite();
    return TiltSlope::finite(slope_mu_poly(c, p.beta())(p.alpha_sq()));
}

SlopePoly slope_mu_poly(const B0Char& c, const Rat& beta)
{
    const B0Char t = c.twist(beta);
    if (t.c1.sign() <= 0)
        throw NotInHeart("slope polynomial needs ch1 > 0 at beta = " + beta.str() + ", got "
                         + t.c1.str());
    return {t.c2 / t.c1, -t.rk / (Rat(2) * t.c1)};
}

Rat classical_slope(const B0Char& c)
{
    if (c.rk.is_zero())
        throw DomainError("classical slope of a rank-0 character");
    return c.twist(Rat(0)).c1 / c.rk;
}

std::pair<Rat, Rat> reduced_Z(const B0Char& c)
{
    const B0Char t = c.at_working_twist();
    return {t.c1, -t.rk};
}

bool ku_constraint_holds(const B0Char& c)
{
    const B0Char t = c.at_working_twist();
    return t.c2 == Rat(-7, 32) * t.rk;
}

B0Char psi_rho_image(const Rat& a, const Rat& b)
{
    const B0Char l1 = b0_char(4, 3, Rat(-7, 8));
    const B0Char l2 = b0_char(-8, 0, Rat(7, 4));
    return a * l1 + b * l2;
}

namespace {

using Matrix3 = std::array<std::array<Rat, 3>, 3>;

Rat det3(const Matrix3& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Columns are the basis vectors (rk, c1, c2).
Matrix3 column_matrix(const std::array<B0Char, 3>& v)
{
    Matrix3 m;
    for (std::size_t j = 0; j < 3; ++j) {
        m[0][j] = v[j].rk;
        m[1][j] = v[j].c1;
        m[2][j] = v[j].c2;
    }
    return m;
}

} // namespace

LatticeBasis::LatticeBasis(std::array<B0Char, 3> vectors) : vectors_(std::move(vectors))
{
    for (auto& v : vectors_)
        v = v.twist(vectors_[0].beta);
    if (det3(column_matrix(vectors_)).is_zero())
        throw DomainError("lattice basis vectors are linearly dependent");
}

LatticeBasis LatticeBasis::standard()
{
    return LatticeBasis({b0_char(4, 1, Rat(1, 8)), b0_char(0, 2, 0), b0_char(0, 0, 1)});
}

LatticeBasis LatticeBasis::at_twist(const Rat& beta) const
{
    std::array<B0Char, 3> v = vectors_;
    for (auto& x : v)
        x = x.twist(beta);
    return LatticeBasis(v);
}

std::array<Rat, 3> LatticeBasis::rational_coords(const B0Char& c) const
{
    // Cramer's rule.
    const B0Char t = c.twist(vectors_[0].beta);
    const Matrix3 m = column_matrix(vectors_);
    const Rat d = det3(m);
    const std::array<Rat, 3> rhs = {t.rk, t.c1, t.c2};
    std::array<Rat, 3> x;
    for (std::size_t j = 0; j < 3; ++j) {
        Matrix3 mj = m;
        for (std::size_t i = 0; i < 3; ++i)
            mj[i][j] = rhs[i];
        x[j] = det3(mj) / d;
    }
    return x;
}

std::array<std::int64_t, 3> lattice_coords(const B0Char& c, const LatticeBasis& basis)
{
    const auto x = basis.rational_coords(c);
    for (const auto& xi : x) {
        if (!xi.is_integer())
            throw IntegralityError("character (" + c.rk.str() + ", " + c.c1.str() + ", " + c.c2.str()
                                       + ") at beta = " + c.beta.str()
                                       + " is not an integral combination of the basis; coordinates ("
                                       + x[0].str() + ", " + x[1].str() + ", " + x[2].str() + ")",
                                   x);
    }
    return {x[0].to_int64(), x[1].to_int64(), x[2].to_int64()};
}

bool in_lattice(const B0Char& c, const LatticeBasis& basis)
{
    for (const auto& xi : basis.rational_coords(c))
        if (!xi.is_integer())
            return false;
    return true;
}

} // namespace kunum
