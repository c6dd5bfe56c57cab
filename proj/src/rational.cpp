#include "lierigid/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lierigid {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));

    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

int64_t to_int64(const Rational& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::domain_error("value " + q.get_str() + " is not a 64-bit integer");
    return q.get_num().get_si();
}

} // namespace lierigid
