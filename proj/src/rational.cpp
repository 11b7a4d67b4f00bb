#include "trideg/rational.hpp"

#include <cctype>

namespace trideg {

std::string to_string(const Rational& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

Rational rational_from_string(const std::string& text) {
    auto bad = [&]() -> ParseError { return ParseError("not a rational: '" + text + "'"); };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw bad();
    auto is_int = [](const std::string& t) {
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(s)) throw bad();
            return Rational(Integer(s));
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw bad();
        Integer d(den);
        if (d == 0) throw bad();
        return Rational(Integer(num), d);
    } catch (const std::exception&) {
        throw bad();
    }
}

bool is_square(const Rational& r) {
    if (r < 0) return false;
    if (r == 0) return true;
    const Integer n = numer(r), d = denom(r);
    const Integer sn = boost::multiprecision::sqrt(n);
    const Integer sd = boost::multiprecision::sqrt(d);
    return sn * sn == n && sd * sd == d;
}

} // namespace trideg
