#include "oriftl/poly.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace oriftl {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) c_.emplace(0, BigInt(c));
}

LaurentPoly LaurentPoly::monomial(int exp, const BigInt& c) {
    LaurentPoly p;
    p.add_term(exp, c);
    return p;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

void LaurentPoly::add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = c_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.c_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a.c_) r.c_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
    return r;
}

bool LaurentPoly::is_bar_symmetric() const { return *this == bar(); }

bool LaurentPoly::in_vZv() const { return c_.empty() || c_.begin()->first > 0; }

bool LaurentPoly::has_negative_coeff() const {
    for (const auto& kv : c_)
        if (kv.second < 0) return true;
    return false;
}

std::string LaurentPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const int e = it->first;
        BigInt c = it->second;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (e == 0) {
            out += c.str();
            continue;
        }
        if (c != 1) out += c.str() + "*";
        out += "v";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return a + b;
        case ArithKind::sub: return a - b;
        case ArithKind::mul: return a * b;
        case ArithKind::negate: return -a;
    }
    throw std::logic_error("bad ArithKind");
}

std::pair<LaurentPoly, LaurentPoly> bar_split(const LaurentPoly& f) {
    LaurentPoly a;
    a.add_term(0, f.coeff(0));
    for (const auto& [e, c] : f.coeffs()) {
        if (e >= 0) break;
        a.add_term(e, c);
        a.add_term(-e, c);
    }
    return {a, f - a};
}

BigInt lp_eval_one(const LaurentPoly& f) {
    BigInt s = 0;
    for (const auto& kv : f.coeffs()) s += kv.second;
    return s;
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

BigInt read_digits(const std::string& s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw std::invalid_argument("expected digits in polynomial: " + s);
    return BigInt(s.substr(start, i - start));
}

}  // namespace

LaurentPoly parse_poly(const std::string& s) {
    LaurentPoly p;
    std::size_t i = 0;
    skip_ws(s, i);
    if (s.substr(i) == "0") return p;
    bool first = true;
    while (true) {
        skip_ws(s, i);
        if (i >= s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws(s, i);
        } else if (!first) {
            throw std::invalid_argument("expected + or - in polynomial: " + s);
        }
        first = false;
        BigInt c = 1;
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            c = read_digits(s, i);
            have_coeff = true;
            skip_ws(s, i);
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws(s, i);
            }
        }
        int e = 0;
        if (i < s.size() && s[i] == 'v') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int es = 1;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                    es = s[i] == '-' ? -1 : 1;
                    ++i;
                }
                e = es * static_cast<int>(read_digits(s, i));
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("bad term in polynomial: " + s);
        }
        p.add_term(e, sign * c);
    }
    return p;
}

nlohmann::json to_json(const LaurentPoly& f) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : f.coeffs()) {
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            j[std::to_string(e)] = static_cast<long long>(c);
        else
            j[std::to_string(e)] = c.str();
    }
    return j;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("LaurentPoly JSON must be an object");
    LaurentPoly p;
    for (const auto& [k, val] : j.items()) {
        std::size_t pos = 0;
        int e = std::stoi(k, &pos);
        if (pos != k.size()) throw std::invalid_argument("bad exponent key: " + k);
        BigInt c;
        if (val.is_number_integer())
            c = BigInt(val.get<long long>());
        else if (val.is_string())
            c = BigInt(val.get<std::string>());
        else
            throw std::invalid_argument("bad coefficient for exponent " + k);
        p.add_term(e, c);
    }
    return p;
}

}  // namespace oriftl
