#include "trideg/mpoly.hpp"

#include <cctype>
#include <sstream>

#include "trideg/errors.hpp"

namespace trideg {

VarList make_vars(const std::string& stem, int count) {
    VarList v;
    v.reserve(count);
    for (int i = 1; i <= count; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

int Monomial::total_degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
}

bool GrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exponents > b.exponents; // lex on exponent vectors
}

MPoly MPoly::constant(VarList vars, const Rational& c) {
    MPoly p(std::move(vars));
    p.add_term(Monomial{std::vector<int>(p.vars_.size(), 0)}, c);
    return p;
}

MPoly MPoly::variable(VarList vars, int index) {
    MPoly p(std::move(vars));
    if (index < 0 || index >= static_cast<int>(p.vars_.size()))
        throw DimensionError("variable index out of range");
    Monomial m{std::vector<int>(p.vars_.size(), 0)};
    m.exponents[index] = 1;
    p.add_term(m, Rational(1));
    return p;
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total_degree(); // leading term has max degree
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

Rational MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::leading_coeff() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.exponents.size() != vars_.size())
        throw DimensionError("monomial length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MPoly::check_same_vars(const MPoly& o) const {
    if (vars_ != o.vars_) throw DimensionError("polynomials over different variable lists");
}

MPoly MPoly::operator-() const {
    MPoly out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_same_vars(o);
    MPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_same_vars(o);
    MPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_same_vars(o);
    MPoly out(vars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += mb.exponents[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

MPoly MPoly::operator*(const Rational& c) const {
    MPoly out(vars_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string monos;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (m.exponents[i] == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += vars_[i];
            if (m.exponents[i] > 1) monos += "^" + std::to_string(m.exponents[i]);
        }
        if (monos.empty()) {
            os << to_string(mag);
        } else {
            if (mag != 1) os << to_string(mag) << "*";
            os << monos;
        }
    }
    return os.str();
}

Rational eval(const MPoly& f, const QVector& point) {
    if (point.size() != f.vars().size())
        throw DimensionError("evaluation point length does not match variable count");
    Rational acc(0);
    for (const auto& [m, c] : f.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (int e = 0; e < m.exponents[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

MPoly partial(const MPoly& f, int var_index) {
    if (var_index < 0 || var_index >= static_cast<int>(f.vars().size()))
        throw DimensionError("partial: variable index out of range");
    MPoly out(f.vars());
    for (const auto& [m, c] : f.terms()) {
        const int e = m.exponents[var_index];
        if (e == 0) continue;
        Monomial d = m;
        d.exponents[var_index] = e - 1;
        out.add_term(d, c * e);
    }
    return out;
}

MPoly substitute_linear(const MPoly& f, const QMatrix& c) {
    const std::size_t n = f.vars().size();
    if (c.size() != n) throw DimensionError("substitution matrix size does not match variable count");
    std::vector<MPoly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i].size() != n) throw DimensionError("substitution matrix is not square");
        MPoly img(f.vars());
        for (std::size_t j = 0; j < n; ++j)
            img = img + MPoly::variable(f.vars(), static_cast<int>(j)) * c[i][j];
        images.push_back(std::move(img));
    }
    MPoly out(f.vars());
    for (const auto& [m, coef] : f.terms()) {
        MPoly term = MPoly::constant(f.vars(), coef);
        for (std::size_t i = 0; i < n; ++i)
            for (int e = 0; e < m.exponents[i]; ++e) term = term * images[i];
        out = out + term;
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    const VarList& vars;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("polynomial parse error at position " + std::to_string(pos) + ": " + why);
    }

    Integer parse_integer() {
        skip_ws();
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits.push_back(s[pos++]);
        if (digits.empty()) fail("expected digits");
        return Integer(digits);
    }

    // factor := integer ('/' integer)? | var ('^' integer)?
    MPoly parse_factor() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            Integer num = parse_integer();
            Rational r(num);
            if (eat('/')) r /= Rational(parse_integer());
            return MPoly::constant(vars, r);
        }
        // Longest variable-name match.
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t v = 0; v < vars.size(); ++v) {
            const std::string& name = vars[v];
            if (name.size() > best_len && s.compare(pos, name.size(), name) == 0) {
                best = static_cast<int>(v);
                best_len = name.size();
            }
        }
        if (best < 0) fail("unknown variable");
        pos += best_len;
        MPoly base = MPoly::variable(vars, best);
        if (eat('^')) {
            Integer e = parse_integer();
            MPoly out = MPoly::constant(vars, Rational(1));
            for (Integer i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    MPoly parse_term() {
        MPoly out = parse_factor();
        while (eat('*')) out = out * parse_factor();
        return out;
    }

    MPoly parse_poly() {
        MPoly out(vars);
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        while (true) {
            MPoly t = parse_term();
            out = neg ? out - t : out + t;
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('-'))
                neg = true;
            else if (eat('+'))
                neg = false;
            else
                fail("expected '+' or '-'");
        }
        return out;
    }
};

} // namespace

MPoly parse_mpoly(const std::string& text, const VarList& vars) {
    std::string trimmed;
    for (char c : text)
        if (c != '\n' && c != '\r') trimmed.push_back(c);
    bool only_ws = true;
    for (char c : trimmed)
        if (!std::isspace(static_cast<unsigned char>(c))) only_ws = false;
    if (only_ws || trimmed == "0") return MPoly(vars);
    Parser p{trimmed, vars};
    MPoly out = p.parse_poly();
    return out;
}

} // namespace trideg
