#include "polya/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include "polya/errors.hpp"

namespace polya {

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
    unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty()) throw std::invalid_argument("MultiPoly: empty variable name");
        if (!seen.insert(v).second)
            throw std::invalid_argument("MultiPoly: duplicate variable '" + v + "'");
    }
}

MultiPoly MultiPoly::constant(const Rational& c, std::vector<std::string> vars) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name, const std::vector<std::string>& vars) {
    MultiPoly p(vars);
    std::size_t i = p.var_index(name);
    if (i == vars.size())
        throw std::invalid_argument("MultiPoly: unknown variable '" + name + "'");
    Monomial m(vars.size(), 0);
    m[i] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c,
                              const std::vector<std::string>& vars) {
    if (m.size() != vars.size())
        throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
    MultiPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::invalid_argument("MultiPoly: not a constant");
    return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Monomial& m = terms_.begin()->first;  // leading term has max degree
    return static_cast<int>(std::accumulate(m.begin(), m.end(), 0ul));
}

int MultiPoly::degree_in(const std::string& name) const {
    if (terms_.empty()) return -1;
    std::size_t i = var_index(name);
    if (i == vars_.size())
        throw std::invalid_argument("MultiPoly: unknown variable '" + name + "'");
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[i]));
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::require_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("MultiPoly: variable-list mismatch");
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    return static_cast<std::size_t>(
        std::find(vars_.begin(), vars_.end(), name) - vars_.begin());
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_vars(o);
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    require_same_vars(o);
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_vars(o);
    MultiPoly out(vars_);
    Monomial prod(vars_.size());
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scale(const Rational& c) const {
    MultiPoly out(vars_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(Rational(1), vars_);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& assignment,
                                const std::vector<std::string>& out_vars) const {
    std::vector<MultiPoly> images;
    images.reserve(vars_.size());
    for (const auto& name : vars_) {
        auto it = assignment.find(name);
        MultiPoly img = (it != assignment.end())
                            ? it->second
                            : MultiPoly::variable(name, out_vars);
        if (img.vars() != out_vars)
            throw std::invalid_argument(
                "MultiPoly::substitute: image of '" + name + "' has wrong variable list");
        images.push_back(std::move(img));
    }
    MultiPoly result(out_vars);
    for (const auto& [m, c] : terms_) {
        MultiPoly term = constant(c, out_vars);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term = term * images[i].pow(m[i]);
        result = result + term;
    }
    return result;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
    Rational result(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = values.find(vars_[i]);
            if (it == values.end())
                throw std::invalid_argument(
                    "MultiPoly::evaluate: no value for '" + vars_[i] + "'");
            term *= it->second.pow(static_cast<long>(m[i]));
        }
        result += term;
    }
    return result;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& new_vars) const {
    MultiPoly out(new_vars);
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        where[i] = out.var_index(vars_[i]);
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_vars.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (where[i] == new_vars.size())
                throw std::invalid_argument(
                    "MultiPoly::with_vars: variable '" + vars_[i] + "' not in target list");
            nm[where[i]] = m[i];
        }
        out.terms_.emplace(std::move(nm), c);
    }
    return out;
}

std::map<unsigned, MultiPoly> MultiPoly::coefficients_of(const std::string& name) const {
    std::size_t k = var_index(name);
    if (k == vars_.size())
        throw std::invalid_argument("MultiPoly: unknown variable '" + name + "'");
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    std::map<unsigned, MultiPoly> out;
    for (const auto& [m, c] : terms_) {
        unsigned e = m[k];
        Monomial nm = m;
        nm.erase(nm.begin() + static_cast<std::ptrdiff_t>(k));
        auto it = out.find(e);
        if (it == out.end()) it = out.emplace(e, MultiPoly(rest)).first;
        it->second.add_term(nm, c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += a.str();
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

std::vector<std::string> indexed_vars(const std::string& stem, unsigned n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (unsigned i = 1; i <= n; ++i) out.push_back(stem + "_" + std::to_string(i));
    return out;
}

// ---- parser -------------------------------------------------------------

namespace {

struct PolyParser {
    const std::string& text;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at column " + std::to_string(pos + 1) +
                         ": " + msg + " in '" + text + "'");
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::string read_digits() {
        skip_ws();
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out.push_back(text[pos++]);
        if (out.empty()) fail("expected digits");
        return out;
    }

    std::string read_name() {
        skip_ws();
        std::string out;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            fail("expected variable name");
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            out.push_back(text[pos++]);
        return out;
    }

    MultiPoly parse_expr() {
        MultiPoly result(vars);
        bool negate = false;
        if (eat('-')) negate = true;
        else (void)eat('+');
        MultiPoly term = parse_term();
        result = negate ? result - term : result + term;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                MultiPoly t = parse_term();
                result = (c == '-') ? result - t : result + t;
            } else {
                break;
            }
        }
        return result;
    }

    MultiPoly parse_term() {
        MultiPoly result = parse_factor();
        while (eat('*')) result = result * parse_factor();
        return result;
    }

    MultiPoly parse_factor() {
        if (eat('-')) return -parse_factor();
        MultiPoly base = parse_base();
        if (eat('^')) {
            std::string d = read_digits();
            unsigned long e = std::stoul(d);
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MultiPoly parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MultiPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_digits();
            if (eat('/')) {
                std::string den = read_digits();
                return MultiPoly::constant(Rational(BigInt(num), BigInt(den)), vars);
            }
            return MultiPoly::constant(Rational(BigInt(num)), vars);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = read_name();
            if (std::find(vars.begin(), vars.end(), name) == vars.end())
                fail("unknown variable '" + name + "'");
            return MultiPoly::variable(name, vars);
        }
        fail("unexpected character");
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, const std::vector<std::string>& vars) {
    PolyParser p{text, vars};
    MultiPoly result = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    return result;
}

}  // namespace polya
