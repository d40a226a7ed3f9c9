#include "generators.hpp"

#include "kunum/errors.hpp"
#include "kunum/intersection_ring.hpp"

#include <doctest.h>

#include <numeric>

using namespace kunum;

namespace {

const VarietyId Y = VarietyId::cubic_fourfold();
const VarietyId P3 = VarietyId::p3();

GradedClass h(VarietyId v, int k, Rat c = Rat(1)) { return GradedClass::monomial(v, k, c); }

Rat factorial(int n)
{
    Rat r(1);
    for (int i = 2; i <= n; ++i)
        r *= Rat(i);
    return r;
}

// Power series of f(x) = sum a_n x^n evaluated at x = s*H.
GradedClass series(VarietyId v, const std::vector<Rat>& a, const Rat& s)
{
    GradedClass out(v);
    for (int n = 0; n <= v.dim && n < static_cast<int>(a.size()); ++n)
        out += h(v, n, a[static_cast<std::size_t>(n)] * pow(s, n));
    return out;
}

// Oracle for td: product over Chern roots, x/(1 - e^{-x}) for each of the
// n+1 copies of H and (1 - e^{-dH})/(dH) for a degree-d hypersurface. Uses
// Bernoulli numbers only, not the Todd polynomials.
GradedClass todd_by_roots(VarietyId v, int copies, int hypersurface_degree)
{
    // x/(1-e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ...
    const std::vector<Rat> todd_series = {Rat(1), Rat(1, 2), Rat(1, 12), Rat(0), Rat(-1, 720)};
    GradedClass td = GradedClass::one(v);
    for (int i = 0; i < copies; ++i)
        td = td * series(v, todd_series, Rat(1));
    if (hypersurface_degree > 0) {
        // (1 - e^{-y})/y = sum (-1)^n y^n/(n+1)!
        std::vector<Rat> a;
        for (int n = 0; n <= 4; ++n)
            a.push_back(pow(Rat(-1), n) / factorial(n + 1));
        td = td * series(v, a, Rat(hypersurface_degree));
    }
    return td;
}

} // namespace

TEST_CASE("mul: products and truncation")
{
    const GradedClass one_plus = GradedClass::one(Y) + h(Y, 1);
    const GradedClass one_minus = GradedClass::one(Y) - h(Y, 1);
    CHECK(one_plus * one_minus == GradedClass::one(Y) - h(Y, 2));
    CHECK(h(Y, 2) * h(Y, 3) == GradedClass::zero(Y));
    CHECK(h(Y, 2) * h(Y, 2) == h(Y, 4));
    CHECK(exp_class(Y, 1) * exp_class(Y, -1) == GradedClass::one(Y));
    CHECK_THROWS_AS(h(Y, 1) * h(P3, 1), VarietyMismatch);
    CHECK_THROWS_AS(h(Y, 1) + h(P3, 1), VarietyMismatch);
    CHECK_THROWS_AS(GradedClass(Y, {Rat(1), Rat(2)}), std::invalid_argument);
}

TEST_CASE("integrate")
{
    CHECK(integrate(h(Y, 4)) == Rat(3));
    CHECK(integrate(h(P3, 3)) == Rat(1));
    CHECK(integrate(GradedClass::zero(Y)) == Rat(0));
    CHECK(integrate(h(VarietyId::p5(), 5, Rat(2))) == Rat(2));
}

TEST_CASE("exp_class")
{
    CHECK(exp_class(Y, 0) == GradedClass::one(Y));
    CHECK(exp_class(Y, 1) == GradedClass(Y, {Rat(1), Rat(1), Rat(1, 2), Rat(1, 6), Rat(1, 24)}));
    kunum::testing::Gen g(7);
    for (int i = 0; i < 50; ++i) {
        const Rat k = g.rat();
        CHECK(exp_class(Y, k) * exp_class(Y, -k) == GradedClass::one(Y));
        const Rat l = g.rat();
        CHECK(exp_class(P3, k) * exp_class(P3, l) == exp_class(P3, k + l));
    }
}

TEST_CASE("dual_ch")
{
    CHECK(dual_ch(exp_class(Y, 1)) == exp_class(Y, -1));
    const GradedClass v(Y, {Rat(0), Rat(2), Rat(-1), Rat(-1, 3), Rat(3, 4)});
    CHECK(dual_ch(v) == GradedClass(Y, {Rat(0), Rat(-2), Rat(-1), Rat(1, 3), Rat(3, 4)}));
    CHECK(dual_ch(dual_ch(v)) == v);
}

TEST_CASE("tangent_chern")
{
    CHECK(tangent_chern(P3) == GradedClass(P3, {Rat(1), Rat(4), Rat(6), Rat(4)}));
    // (1+H)^6 (1+3H)^{-1} by long division: 1, 6-3, 15-18+9, 20-45+54-27, 15-60+135-162+81.
    CHECK(tangent_chern(Y) == GradedClass(Y, {Rat(1), Rat(3), Rat(6), Rat(2), Rat(9)}));
    for (auto v : {P3, Y, VarietyId::p5()})
        CHECK(tangent_chern(v)[0] == Rat(1));
}

TEST_CASE("todd_from_chern matches the Chern-root oracle")
{
    const GradedClass td_y = todd_class(Y);
    CHECK(td_y == GradedClass(Y, {Rat(1), Rat(3, 2), Rat(5, 4), Rat(3, 4), Rat(1, 3)}));
    CHECK(td_y == todd_by_roots(Y, 6, 3));
    CHECK(integrate(td_y) == Rat(1));

    const GradedClass td_p3 = todd_class(P3);
    CHECK(td_p3 == GradedClass(P3, {Rat(1), Rat(2), Rat(11, 6), Rat(1)}));
    CHECK(td_p3 == todd_by_roots(P3, 4, 0));

    CHECK(todd_from_chern(GradedClass::one(Y)) == GradedClass::one(Y));
    CHECK_THROWS_AS(todd_from_chern(GradedClass(Y, {Rat(2), Rat(0), Rat(0), Rat(0), Rat(0)})), DomainError);
    CHECK_THROWS_AS(todd_class(VarietyId::p5()), DomainError);
}

TEST_CASE("Riemann-Roch on P3 reproduces binomial coefficients")
{
    const GradedClass td = todd_class(P3);
    for (long n = -10; n <= 10; ++n)
        CHECK(integrate(td * exp_class(P3, n)) == Rat((n + 1) * (n + 2) * (n + 3), 6));
    // Weight of ch_k in chi: (rk, ch1, ch2, ch3) -> (1, 11/6, 2, 1).
    const Rat expected[] = {Rat(1), Rat(11, 6), Rat(2), Rat(1)};
    for (int k = 0; k <= 3; ++k)
        CHECK(hrr_euler_characteristic(h(P3, k)) == expected[k]);
}

TEST_CASE("Riemann-Roch on Y")
{
    CHECK(hrr_euler_characteristic(GradedClass::one(Y)) == Rat(1));
    CHECK(hrr_euler_characteristic(exp_class(Y, 1)) == Rat(6));
    CHECK(hrr_euler_characteristic(exp_class(Y, 2)) == Rat(21));
    // h^0(O_Y(3H)) = dim Sym^3(C^6) - 1 = 55.
    CHECK(hrr_euler_characteristic(exp_class(Y, 3)) == Rat(55));
}

TEST_CASE("ring axioms on random classes")
{
    kunum::testing::Gen g(11);
    auto random_class = [&](VarietyId v) {
        std::vector<Rat> c;
        for (int k = 0; k <= v.dim; ++k)
            c.push_back(g.rat(6, 5));
        return GradedClass(v, c);
    };
    for (int i = 0; i < 60; ++i) {
        const GradedClass a = random_class(Y), b = random_class(Y), c = random_class(Y);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(dual_ch(a * b) == dual_ch(a) * dual_ch(b));
        CHECK(dual_ch(dual_ch(a)) == a);
    }
}
