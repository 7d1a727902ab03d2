#include "pmd/rational.hpp"

#include <cctype>

#include "pmd/errors.hpp"

namespace pmd {

std::string rational_to_string(const Rational& value) {
    return value.str();
}

Rational rational_from_string(const std::string& text) {
    if (text.empty())
        fail(Errc::parse_error, "empty rational literal");
    std::size_t i = 0;
    auto digits_from = [&](std::size_t start) {
        if (start >= text.size())
            return false;
        for (std::size_t k = start; k < text.size(); ++k) {
            if (text[k] == '/')
                return k > start;
            if (!std::isdigit(static_cast<unsigned char>(text[k])))
                return false;
        }
        return true;
    };
    if (text[i] == '-' || text[i] == '+')
        ++i;
    if (!digits_from(i))
        fail(Errc::parse_error, "malformed rational literal '" + text + "'");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::size_t j = slash + 1;
        if (j < text.size() && (text[j] == '-' || text[j] == '+'))
            fail(Errc::parse_error, "signed denominator in '" + text + "'");
        if (!digits_from(j))
            fail(Errc::parse_error, "malformed rational literal '" + text + "'");
        if (text.find('/', j) != std::string::npos)
            fail(Errc::parse_error, "malformed rational literal '" + text + "'");
        if (text.find_first_not_of('0', j) == std::string::npos)
            fail(Errc::parse_error, "zero denominator in '" + text + "'");
    }
    try {
        return Rational(text);
    } catch (const std::exception&) {
        fail(Errc::parse_error, "malformed rational literal '" + text + "'");
    }
}

} // namespace pmd
