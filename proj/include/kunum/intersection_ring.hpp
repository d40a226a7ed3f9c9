#pragma once

#include "kunum/rational.hpp"

#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace kunum {

enum class Variety { P3, P5, CubicFourfold };

/// Ambient space with Picard rank one: dimension and degree of the
/// hyperplane class.
struct VarietyId {
    Variety name;
    int dim;
    int h_top; ///< integral of H^dim

    static VarietyId of(Variety v);
    static VarietyId p3() { return of(Variety::P3); }
    static VarietyId p5() { return of(Variety::P5); }
    static VarietyId cubic_fourfold() { return of(Variety::CubicFourfold); }

    std::string_view label() const;

    friend bool operator==(const VarietyId&, const VarietyId&) = default;
};

/// Element of Q[H]/(H^{dim+1}) on a fixed variety. coeffs()[k] is the
/// coefficient of H^k.
class GradedClass {
public:
    explicit GradedClass(VarietyId v);
    GradedClass(VarietyId v, std::vector<Rat> coeffs);
    GradedClass(VarietyId v, std::initializer_list<Rat> coeffs);

    static GradedClass zero(VarietyId v) { return GradedClass(v); }
    static GradedClass one(VarietyId v);
    /// coeff * H^k; zero when k exceeds the dimension.
    static GradedClass monomial(VarietyId v, int k, const Rat& coeff = Rat(1));

    const VarietyId& variety() const { return variety_; }
    std::span<const Rat> coeffs() const { return coeffs_; }
    const Rat& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    int dim() const { return variety_.dim; }
    bool is_zero() const;

    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);
    GradedClass& operator*=(const Rat& s);

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator-(GradedClass a) { return a *= Rat(-1); }
    friend GradedClass operator*(GradedClass a, const Rat& s) { return a *= s; }
    friend GradedClass operator*(const Rat& s, GradedClass a) { return a *= s; }
    /// Truncated ring product; throws VarietyMismatch.
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b) { return mul(a, b); }

    friend GradedClass mul(const GradedClass& a, const GradedClass& b);

    friend bool operator==(const GradedClass& a, const GradedClass& b);

private:
    void require_same(const GradedClass& o, const char* what) const;

    VarietyId variety_;
    std::vector<Rat> coeffs_;
};

GradedClass mul(const GradedClass& a, const GradedClass& b);

/// coeffs[dim] * h_top.
Rat integrate(const GradedClass& a);

/// ch(O(kH)) = exp(kH), truncated.
GradedClass exp_class(VarietyId v, const Rat& k);

/// Sign twist H^k -> (-1)^k H^k, i.e. ch(E) -> ch(E^dual).
GradedClass dual_ch(const GradedClass& a);

/// Multiplicative inverse of a class with degree-0 coefficient 1.
GradedClass inverse_unital(const GradedClass& a);

/// Total Chern class of the tangent bundle (Euler sequence, plus the normal
/// bundle O(3H) for the cubic fourfold).
GradedClass tangent_chern(VarietyId v);

/// Todd class from a total Chern class through degree 4. Throws DomainError
/// on non-unital input or when the ambient dimension exceeds 4.
GradedClass todd_from_chern(const GradedClass& c);

/// todd_from_chern(tangent_chern(v)).
GradedClass todd_class(VarietyId v);

/// Hirzebruch-Riemann-Roch: integrate(ch * td(v)).
Rat hrr_euler_characteristic(const GradedClass& ch);

} // namespace kunum
