#include "prismlab/rational.hpp"

#include "prismlab/errors.hpp"

#include <cctype>

namespace prismlab {

namespace {

boost::multiprecision::cpp_int parse_integer(const std::string& text, const std::string& whole)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size())
        throw ParseError("malformed rational \"" + whole + "\"");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("malformed rational \"" + whole + "\"");
    boost::multiprecision::cpp_int value(text.substr(i));
    return text[0] == '-' ? boost::multiprecision::cpp_int(-value) : value;
}

} // namespace

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(text, text));
    const auto num = parse_integer(text.substr(0, slash), text);
    const std::string den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("malformed rational \"" + text + "\"");
    const auto den = parse_integer(den_text, text);
    if (den == 0)
        throw ParseError("zero denominator in \"" + text + "\"");
    return Rational(num, den);
}

std::string to_string(const Rational& value)
{
    const auto num = boost::multiprecision::numerator(value);
    const auto den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace prismlab
