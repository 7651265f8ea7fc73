#include "qschur/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qschur/errors.hpp"
#include "qschur/vendor_json.hpp"

namespace qschur {

namespace {

void trim_poly(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of a modulo m, m monic with constant term first.
std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& m) {
    size_t deg_m = m.size() - 1;
    trim_poly(a);
    while (a.size() > deg_m) {
        Rat lead = a.back();
        size_t shift = a.size() - 1 - deg_m;
        for (size_t i = 0; i < m.size(); ++i) a[shift + i] -= lead * m[i];
        trim_poly(a);
    }
    a.resize(deg_m, Rat(0));
    return a;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

} // namespace

FieldElem::FieldElem(const FieldConfig* cfg, std::vector<Rat> coeffs) : cfg_(cfg) {
    coeffs_ = poly_mod(std::move(coeffs), cfg->minpoly());
}

FieldElem FieldElem::from_rat(const FieldConfig* cfg, const Rat& c) {
    return FieldElem(cfg, std::vector<Rat>{c});
}

bool FieldElem::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

FieldElem FieldElem::operator-() const {
    FieldElem e = *this;
    for (auto& c : e.coeffs_) c = -c;
    return e;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    FieldElem e = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) e.coeffs_[i] += o.coeffs_[i];
    return e;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    return FieldElem(cfg_, poly_mul(coeffs_, o.coeffs_));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

bool FieldElem::operator==(const FieldElem& o) const { return coeffs_ == o.coeffs_; }

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw zero_divisor("inverse of zero field element");
    // Extended Euclid on (coeffs_, minpoly): g = s*this + t*m.
    std::vector<Rat> r0 = cfg_->minpoly_;
    std::vector<Rat> r1 = coeffs_;
    trim_poly(r1);
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
    while (true) {
        trim_poly(r1);
        if (r1.empty()) throw zero_divisor("zero divisor met during inversion (reducible minpoly?)");
        if (r1.size() == 1) {
            // r1 = g (nonzero constant): inverse = s1 / g.
            FieldElem inv(cfg_, s1);
            Rat g = r1[0];
            for (auto& c : inv.coeffs_) c /= g;
            return inv;
        }
        // r0 = q*r1 + r2
        std::vector<Rat> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        std::vector<Rat> r2 = r0;
        while (r2.size() >= r1.size()) {
            trim_poly(r2);
            if (r2.size() < r1.size()) break;
            Rat c = r2.back() / r1.back();
            size_t shift = r2.size() - r1.size();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= c * r1[i];
            trim_poly(r2);
            if (r2.empty()) break;
        }
        // s2 = s0 - q*s1
        std::vector<Rat> qs = poly_mul(q, s1);
        std::vector<Rat> s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
}

std::string FieldElem::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

FieldConfig::FieldConfig(Mode mode, std::vector<Rat> minpoly, std::vector<Rat> q_value,
                         std::vector<std::vector<Rat>> q_k_values)
    : mode_(mode), minpoly_(std::move(minpoly)), q_value_(std::move(q_value)),
      q_values_(std::move(q_k_values)) {
    if (minpoly_.size() < 2) throw parse_error("minimal polynomial must have degree >= 1");
    // Make monic.
    Rat lead = minpoly_.back();
    if (lead == 0) throw parse_error("minimal polynomial has zero leading coefficient");
    if (lead != 1) {
        for (auto& c : minpoly_) c /= lead;
    }
    // q must be invertible; probe once at load.
    FieldElem qe = q();
    if (qe.is_zero()) throw non_invertible_q("q specializes to zero");
    try {
        qe.inverse();
    } catch (const Error&) {
        throw non_invertible_q("q_value is not invertible in the configured field");
    }
}

FieldConfig FieldConfig::rational(const Rat& q, const std::vector<Rat>& Q) {
    std::vector<std::vector<Rat>> qv;
    qv.reserve(Q.size());
    for (const auto& c : Q) qv.push_back({c});
    return FieldConfig(Mode::Rational, {Rat(0), Rat(1)}, {q}, std::move(qv));
}

FieldElem FieldConfig::q() const { return FieldElem(this, q_value_); }
FieldElem FieldConfig::q_inv() const { return q().inverse(); }

FieldElem FieldConfig::Q(int k) const {
    if (k < 1 || k > int(q_values_.size())) throw internal_error("Q index out of range");
    return FieldElem(this, q_values_[size_t(k - 1)]);
}

FieldElem FieldConfig::zero() const { return FieldElem(this, {}); }
FieldElem FieldConfig::one() const { return FieldElem(this, {Rat(1)}); }
FieldElem FieldConfig::element(std::vector<Rat> coeffs) const {
    return FieldElem(this, std::move(coeffs));
}

std::string FieldConfig::describe() const {
    std::ostringstream os;
    if (mode_ == Mode::Rational) {
        os << "rational";
    } else {
        os << "number_field";
    }
    os << " q=" << q().str();
    for (int k = 1; k <= num_q_vars(); ++k) os << " Q" << k << "=" << Q(k).str();
    return os.str();
}

FieldElem specialize(const LaurentPoly& p, const FieldConfig& cfg) {
    if (p.num_q_vars() > cfg.num_q_vars())
        throw internal_error("field config has too few Q values");
    FieldElem acc = cfg.zero();
    FieldElem qv = cfg.q();
    FieldElem qi = cfg.q_inv();
    for (const auto& [e, c] : p.terms()) {
        FieldElem t = FieldElem::from_rat(acc.config(), c);
        int eq = e[0];
        const FieldElem& base = eq >= 0 ? qv : qi;
        for (int j = 0; j < std::abs(eq); ++j) t *= base;
        for (size_t k = 1; k < e.size(); ++k) {
            FieldElem Qk = cfg.Q(int(k));
            for (int j = 0; j < e[k]; ++j) t *= Qk;
        }
        acc += t;
    }
    return acc;
}

FieldElem specialize(const Fraction& f, const FieldConfig& cfg) {
    FieldElem den = specialize(f.den(), cfg);
    if (den.is_zero())
        throw denominator_vanishes("denominator specializes to zero: " + f.den().str());
    return specialize(f.num(), cfg) / den;
}

std::vector<Rat> parse_univariate(const std::string& text) {
    // Reuse the Laurent parser with x in the role of q and no Q variables.
    std::string t = text;
    for (auto& ch : t) {
        if (ch == 'x') ch = 'q';
    }
    LaurentPoly p = LaurentPoly::parse(t, 0);
    std::vector<Rat> coeffs;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] < 0) throw parse_error("negative exponent in univariate literal: " + text);
        if (size_t(e[0]) >= coeffs.size()) coeffs.resize(size_t(e[0]) + 1, Rat(0));
        coeffs[size_t(e[0])] = c;
    }
    if (coeffs.empty()) coeffs.push_back(Rat(0));
    return coeffs;
}

FieldConfig FieldConfig::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::string mode = j.value("mode", "rational");
    std::vector<Rat> minpoly;
    Mode m;
    if (mode == "rational") {
        m = Mode::Rational;
        minpoly = {Rat(0), Rat(1)};
    } else if (mode == "number_field") {
        m = Mode::NumberField;
        if (!j.contains("minpoly")) throw parse_error("number_field config requires minpoly");
        minpoly = parse_univariate(j["minpoly"].get<std::string>());
        if (minpoly.size() < 2) throw parse_error("minpoly must have degree >= 1");
    } else {
        throw parse_error("unknown field mode: " + mode);
    }
    if (!j.contains("q")) throw parse_error("field config requires q");
    std::vector<Rat> qv = parse_univariate(j["q"].get<std::string>());
    std::vector<std::vector<Rat>> Qs;
    if (j.contains("Q")) {
        for (const auto& item : j["Q"]) Qs.push_back(parse_univariate(item.get<std::string>()));
    }
    return FieldConfig(m, std::move(minpoly), std::move(qv), std::move(Qs));
}

} // namespace qschur
