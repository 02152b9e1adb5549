#include "fairdex/value.hpp"

#include "fairdex/errors.hpp"

#include <algorithm>
#include <cctype>

namespace fairdex {

namespace {

bool all_digits(std::string_view s)
{
    return ! s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (! s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (! all_digits(s))
        throw InputError("invalid numeric literal '" + std::string(whole) + "'");
    BigInt result{std::string(s)};
    return negative ? BigInt(-result) : result;
}

}

Value parse_value(std::string_view text)
{
    std::string_view s = text;
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.empty())
        throw InputError("empty numeric literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(s.substr(0, slash), text);
        BigInt den = parse_integer(s.substr(slash + 1), text);
        if (den == 0)
            throw InputError("zero denominator in '" + std::string(text) + "'");
        return Value(num, den);
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view frac = s.substr(dot + 1);
        if (! all_digits(frac))
            throw InputError("invalid numeric literal '" + std::string(text) + "'");
        std::string digits = std::string(s.substr(0, dot)) + std::string(frac);
        BigInt num = parse_integer(digits, text);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            den *= 10;
        return Value(num, den);
    }

    return Value(parse_integer(s, text));
}

std::string format_value(const Value& v)
{
    if (denominator(v) == 1)
        return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}
