#include "maprad/rational.hpp"

#include <cctype>
#include <ostream>

namespace maprad {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rat Rat::parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!valid_integer_token(num))
        throw DomainError("ParseError", "bad rational literal '" + text + "'");
    mpz_class n(num);
    mpz_class d(1);
    if (slash != std::string::npos) {
        const std::string den = text.substr(slash + 1);
        if (!valid_integer_token(den))
            throw DomainError("ParseError", "bad rational literal '" + text + "'");
        d = mpz_class(den);
        if (sgn(d) == 0)
            throw DomainError("ParseError", "zero denominator in '" + text + "'");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rat(std::move(q));
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace maprad
