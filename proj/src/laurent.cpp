#include "qschur/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qschur/errors.hpp"

namespace qschur {

LaurentPoly::LaurentPoly(int nq, const Rat& c) : nq_(nq) {
    if (c != 0) terms_.emplace(Expo(size_t(nq) + 1, 0), c);
}

LaurentPoly LaurentPoly::q_power(int nq, int e, const Rat& c) {
    LaurentPoly p(nq);
    Expo ex(size_t(nq) + 1, 0);
    ex[0] = e;
    p.add_term(ex, c);
    return p;
}

LaurentPoly LaurentPoly::variable_Q(int nq, int k) {
    if (k < 1 || k > nq) throw internal_error("Q index out of range");
    LaurentPoly p(nq);
    Expo ex(size_t(nq) + 1, 0);
    ex[size_t(k)] = 1;
    p.add_term(ex, 1);
    return p;
}

void LaurentPoly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(nq_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    p += o;
    return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly p = *this;
    p -= o;
    return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly p(nq_);
    Expo e(size_t(nq_) + 1, 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    LaurentPoly p(nq_);
    if (c == 0) return p;
    for (const auto& [e, cc] : terms_) p.terms_.emplace(e, cc * c);
    return p;
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly_by(const LaurentPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return LaurentPoly(nq_);

    // Shift q-exponents so both operands are honest polynomials with some
    // term of q-degree zero; q is a unit, so the Laurent quotient exists iff
    // the shifted polynomial quotient does. Terms are sorted descending, so
    // the minimal q-exponent sits in the last term.
    int min_num = terms_.rbegin()->first[0];
    int min_den = d.terms_.rbegin()->first[0];

    LaurentPoly rem = *this;
    if (min_num != 0) rem = rem * q_power(nq_, -min_num);
    LaurentPoly dd = d;
    if (min_den != 0) dd = dd * q_power(nq_, -min_den);

    const Expo& lead_d = dd.terms_.begin()->first;
    const Rat& lc_d = dd.terms_.begin()->second;

    LaurentPoly quot(nq_);
    Expo e(size_t(nq_) + 1, 0);
    while (!rem.is_zero()) {
        const Expo& lead_r = rem.terms_.begin()->first;
        bool divisible = true;
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = lead_r[i] - lead_d[i];
            if (i > 0 && e[i] < 0) divisible = false;
        }
        if (e[0] < 0) divisible = false;
        if (!divisible) return std::nullopt;
        Rat c = rem.terms_.begin()->second / lc_d;
        LaurentPoly t(nq_);
        t.add_term(e, c);
        quot += t;
        rem -= t * dd;
    }
    int shift = min_num - min_den;
    if (shift != 0) quot = quot * q_power(nq_, shift);
    return quot;
}

bool LaurentPoly::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

Rat LaurentPoly::content() const {
    if (is_zero()) return 0;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        num_gcd = g;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = l;
    }
    Rat r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

Rat LaurentPoly::leading_coefficient() const {
    if (is_zero()) return 0;
    return terms_.begin()->second;
}

std::optional<std::pair<Rat, int>> LaurentPoly::as_q_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    for (size_t i = 1; i < e.size(); ++i) {
        if (e[i] != 0) return std::nullopt;
    }
    return std::make_pair(c, e[0]);
}

LaurentPoly LaurentPoly::substitute_Q(int k, const LaurentPoly& value) const {
    LaurentPoly out(nq_);
    for (const auto& [e, c] : terms_) {
        Expo e2 = e;
        int pow = e2[size_t(k)];
        e2[size_t(k)] = 0;
        LaurentPoly t(nq_);
        t.add_term(e2, c);
        for (int j = 0; j < pow; ++j) t *= value;
        out += t;
    }
    return out;
}

namespace {

void append_monomial(std::ostringstream& os, const Expo& e, const Rat& c_in, bool first) {
    Rat c = c_in;
    if (first) {
        if (c < 0) {
            os << "-";
            c = -c;
        }
    } else {
        if (c < 0) {
            os << " - ";
            c = -c;
        } else {
            os << " + ";
        }
    }
    bool has_var = false;
    for (int x : e) {
        if (x != 0) has_var = true;
    }
    bool coeff_shown = false;
    if (c != 1 || !has_var) {
        os << c.get_str();
        coeff_shown = true;
    }
    auto emit = [&](const char* name, int k, int exp) {
        if (exp == 0) return;
        if (coeff_shown) os << "*";
        coeff_shown = true;
        os << name;
        if (k > 0) os << k;
        if (exp != 1) os << "^" << exp;
    };
    emit("q", 0, e[0]);
    for (size_t i = 1; i < e.size(); ++i) emit("Q", int(i), e[i]);
}

} // namespace

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_monomial(os, e, c, first);
        first = false;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

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
    bool consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    long parse_int() {
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error("expected integer in polynomial literal: " + s);
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    }
    Rat parse_rat() {
        long num = parse_int();
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            ++i;
            long den = parse_int();
            if (den == 0) throw parse_error("zero denominator in literal: " + s);
            Rat r(num, den);
            r.canonicalize();
            return r;
        }
        return Rat(num);
    }
};

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, int nq) {
    Parser p(text);
    LaurentPoly out(nq);
    bool first = true;
    while (!p.eof()) {
        int sign = 1;
        if (p.consume('+')) {
            // explicit plus
        } else if (p.consume('-')) {
            sign = -1;
        } else if (!first) {
            throw parse_error("expected '+' or '-' in polynomial literal: " + text);
        }
        first = false;

        Rat coeff = 1;
        Expo e(size_t(nq) + 1, 0);
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            p.skip_ws();
            char c = p.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= p.parse_rat();
                saw_factor = true;
            } else if (c == 'q') {
                ++p.i;
                int exp = 1;
                if (p.consume('^')) exp = int(p.parse_int());
                e[0] += exp;
                saw_factor = true;
            } else if (c == 'Q') {
                ++p.i;
                long k = p.parse_int();
                if (k < 1 || k > nq) throw parse_error("Q index out of range in: " + text);
                int exp = 1;
                if (p.consume('^')) exp = int(p.parse_int());
                if (exp < 0) throw parse_error("negative Q exponent in: " + text);
                e[size_t(k)] += exp;
                saw_factor = true;
            } else {
                throw parse_error("unexpected character in polynomial literal: " + text);
            }
            expect_factor = p.consume('*');
        }
        if (!saw_factor) throw parse_error("empty term in polynomial literal: " + text);
        out.add_term(e, coeff * sign);
    }
    return out;
}

LaurentPoly quantum_int(int k, int nq) {
    LaurentPoly p(nq);
    int a = std::abs(k);
    for (int j = 0; j < a; ++j) p += LaurentPoly::q_power(nq, a - 1 - 2 * j);
    if (k < 0) return -p;
    return p;
}

LaurentPoly quantum_factorial(int t, int nq) {
    if (t < 0) throw internal_error("negative quantum factorial");
    LaurentPoly p = LaurentPoly::constant(nq, 1);
    for (int j = 1; j <= t; ++j) p *= quantum_int(j, nq);
    return p;
}

LaurentPoly quantum_binom(int k, int t, int nq) {
    if (t < 0) throw internal_error("negative quantum binomial argument");
    LaurentPoly num = LaurentPoly::constant(nq, 1);
    for (int j = 0; j < t; ++j) num *= quantum_int(k - j, nq);
    auto q = num.divided_exactly_by(quantum_factorial(t, nq));
    if (!q) throw internal_error("inexact quantum binomial division");
    return *q;
}

} // namespace qschur
