#include "lfds/poly_text.hpp"

#include <cctype>
#include <stdexcept>

namespace lfds {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        if (i >= s.size()) throw std::invalid_argument("polynomial parse: unexpected end of input");
        return s[i++];
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    int64_t integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("polynomial parse: expected integer");
        try {
            return std::stoll(s.substr(start, i - start));
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("polynomial parse: integer literal out of range");
        }
    }
};

// One monomial in variable `var` with integer coefficients: c, c*var^k, var^k.
// Returns (coefficient, exponent).
std::pair<int64_t, int> parse_int_term(Cursor& cur, char var) {
    int64_t coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        coef = cur.integer();
        have_coef = true;
    }
    int exp = 0;
    if (cur.peek() == var) {
        cur.take();
        exp = 1;
        if (cur.accept('^')) exp = static_cast<int>(cur.integer());
    } else if (!have_coef) {
        throw std::invalid_argument(std::string("polynomial parse: expected term in '") + var + "'");
    }
    if (cur.accept('*')) {
        // allow `c*x^k` written as `x^k*c`? No: only coefficient-first; a '*'
        // here must be followed by the variable.
        if (exp != 0) throw std::invalid_argument("polynomial parse: unexpected '*'");
        if (cur.peek() != var)
            throw std::invalid_argument(std::string("polynomial parse: expected '") + var + "' after '*'");
        cur.take();
        exp = 1;
        if (cur.accept('^')) exp = static_cast<int>(cur.integer());
    }
    return {coef, exp};
}

std::vector<int64_t> parse_int_poly(Cursor& cur, char var, int64_t modulus, char terminator) {
    std::vector<int64_t> coeffs;
    int sign = 1;
    if (cur.accept('-'))
        sign = -1;
    else
        cur.accept('+');
    while (true) {
        auto [c, k] = parse_int_term(cur, var);
        if (static_cast<size_t>(k) >= coeffs.size()) coeffs.resize(static_cast<size_t>(k) + 1, 0);
        int64_t v = (coeffs[static_cast<size_t>(k)] + sign * (c % modulus)) % modulus;
        coeffs[static_cast<size_t>(k)] = v < 0 ? v + modulus : v;
        if (cur.eof() || cur.peek() == terminator) break;
        if (cur.accept('+'))
            sign = 1;
        else if (cur.accept('-'))
            sign = -1;
        else
            throw std::invalid_argument("polynomial parse: expected '+' or '-' between terms");
    }
    return coeffs;
}

void add_coeff(std::vector<int64_t>& flat, size_t d, int64_t pe, int exp,
               const std::vector<int64_t>& tcoeffs, int sign) {
    if (tcoeffs.size() > d)
        throw std::invalid_argument("polynomial parse: coefficient degree in t exceeds d-1");
    if (flat.size() < (static_cast<size_t>(exp) + 1) * d) flat.resize((static_cast<size_t>(exp) + 1) * d, 0);
    for (size_t j = 0; j < tcoeffs.size(); ++j) {
        int64_t v = (flat[static_cast<size_t>(exp) * d + j] + sign * (tcoeffs[j] % pe)) % pe;
        flat[static_cast<size_t>(exp) * d + j] = v < 0 ? v + pe : v;
    }
}

}  // namespace

GrPoly parse_poly(const RingSpecPtr& spec, int eps, const std::string& text) {
    Cursor cur{text};
    if (cur.eof()) throw std::invalid_argument("polynomial parse: empty input");
    const size_t d = static_cast<size_t>(spec->d());
    const int64_t pe = spec->char_pow(eps);
    std::vector<int64_t> flat;

    int sign = 1;
    if (cur.accept('-'))
        sign = -1;
    else
        cur.accept('+');
    while (true) {
        std::vector<int64_t> tcoeffs;
        int exp = 0;
        if (cur.peek() == '[') {
            cur.take();
            tcoeffs = parse_int_poly(cur, 't', pe, ']');
            if (!cur.accept(']')) throw std::invalid_argument("polynomial parse: missing ']'");
            if (cur.accept('*')) {
                if (cur.peek() != 'x')
                    throw std::invalid_argument("polynomial parse: expected 'x' after '*'");
                cur.take();
                exp = 1;
                if (cur.accept('^')) exp = static_cast<int>(cur.integer());
            }
        } else {
            auto [c, k] = parse_int_term(cur, 'x');
            tcoeffs = {c % pe};
            exp = k;
        }
        add_coeff(flat, d, pe, exp, tcoeffs, sign);
        if (cur.eof()) break;
        if (cur.accept('+'))
            sign = 1;
        else if (cur.accept('-'))
            sign = -1;
        else
            throw std::invalid_argument("polynomial parse: expected '+' or '-' between terms");
    }
    return GrPoly::from_raw(spec, eps, std::move(flat));
}

std::vector<int64_t> parse_tpoly(int64_t p, const std::string& text) {
    Cursor cur{text};
    if (cur.eof()) throw std::invalid_argument("polynomial parse: empty input");
    return parse_int_poly(cur, 't', p, '\0');
}

namespace {

// Coefficient print for one GR element; plain integer when only the constant
// t-coordinate is set, bracketed t-polynomial otherwise.
std::string print_coeff(const int64_t* c, size_t d) {
    bool t_free = true;
    for (size_t j = 1; j < d; ++j)
        if (c[j]) t_free = false;
    if (t_free) return std::to_string(c[0]);
    std::string out = "[";
    bool first = true;
    for (size_t j = d; j-- > 0;) {
        if (!c[j]) continue;
        if (!first) out += "+";
        first = false;
        if (j == 0) {
            out += std::to_string(c[j]);
        } else {
            if (c[j] != 1) out += std::to_string(c[j]) + "*";
            out += "t";
            if (j > 1) out += "^" + std::to_string(j);
        }
    }
    out += "]";
    return out;
}

}  // namespace

std::string print_poly(const GrPoly& f) {
    if (f.is_zero()) return "0";
    const size_t d = static_cast<size_t>(f.spec()->d());
    std::string out;
    for (size_t k = f.n_terms(); k-- > 0;) {
        const int64_t* c = f.raw().data() + k * d;
        bool zero = true;
        for (size_t j = 0; j < d; ++j)
            if (c[j]) zero = false;
        if (zero) continue;
        if (!out.empty()) out += "+";
        std::string cs = print_coeff(c, d);
        if (k == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace lfds
