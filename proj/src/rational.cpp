#include "kunum/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace kunum {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!is_integer_literal(s))
        throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rat::Rat(long num, long den) : q_(num, den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q))
{
    if (q_.get_den() == 0)
        throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_integer(text));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw std::invalid_argument("sign in denominator: '" + std::string(text) + "'");
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(den_text);
    if (den == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rat(mpq_class(num, den));
}

std::string Rat::str() const
{
    return q_.get_str(10);
}

mpz_class Rat::floor() const
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class Rat::ceil() const
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

std::int64_t Rat::to_int64() const
{
    if (!is_integer())
        throw std::domain_error("rational " + str() + " is not an integer");
    const mpz_class& n = q_.get_num();
    if (n < std::numeric_limits<long>::min() || n > std::numeric_limits<long>::max())
        throw std::overflow_error("integer " + str() + " does not fit in 64 bits");
    return n.get_si();
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r)
{
    return os << r.str();
}

Rat rational_gcd(const Rat& a, const Rat& b)
{
    // gcd(p/q, r/s) = gcd(p s, r q) / (q s), then canonicalised.
    const mpz_class qs = a.den() * b.den();
    mpz_class g;
    const mpz_class x = a.num() * b.den();
    const mpz_class y = b.num() * a.den();
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return Rat(mpq_class(g, qs));
}

Rat pow(const Rat& base, int exponent)
{
    if (exponent < 0)
        return Rat(1) / pow(base, -exponent);
    Rat result(1);
    for (int i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

} // namespace kunum
