#pragma once

#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace oriftl {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in v with arbitrary-precision integer coefficients.
// Sparse storage: exponent -> nonzero coefficient.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);

    static LaurentPoly monomial(int exp, const BigInt& c = 1);

    const std::map<int, BigInt>& coeffs() const { return c_; }
    BigInt coeff(int exp) const;
    bool is_zero() const { return c_.empty(); }
    int min_exp() const;
    int max_exp() const;
    std::size_t num_terms() const { return c_.size(); }

    void add_term(int exp, const BigInt& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // v -> v^{-1}
    LaurentPoly bar() const;
    bool is_bar_symmetric() const;
    // every exponent strictly positive (zero polynomial included)
    bool in_vZv() const;
    bool has_negative_coeff() const;

    // "c*v^k + ..." in descending exponent order, "0" for zero.
    std::string str() const;

private:
    std::map<int, BigInt> c_;
};

enum class ArithKind { add, sub, mul, negate };

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithKind kind);

// f = a + n with a bar-symmetric and n in vZ[v].
std::pair<LaurentPoly, LaurentPoly> bar_split(const LaurentPoly& f);

BigInt lp_eval_one(const LaurentPoly& f);

LaurentPoly parse_poly(const std::string& s);

nlohmann::json to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace oriftl
