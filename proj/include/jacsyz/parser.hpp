#pragma once

#include <cctype>
#include <string>

#include "jacsyz/poly.hpp"

namespace jacsyz {

namespace detail {

/// General (not yet homogeneous) polynomial used only while parsing.
struct RawPoly {
    std::map<Monomial, Scalar, GrlexDescending> terms;

    void add(const Monomial& m, const Scalar& c) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    static RawPoly from_scalar(const Scalar& c) {
        RawPoly p;
        p.add({0, 0, 0}, c);
        return p;
    }
    RawPoly operator+(const RawPoly& o) const {
        RawPoly p = *this;
        for (const auto& [m, c] : o.terms) p.add(m, c);
        return p;
    }
    RawPoly operator-() const {
        RawPoly p;
        for (const auto& [m, c] : terms) p.terms.emplace(m, -c);
        return p;
    }
    RawPoly operator*(const RawPoly& o) const {
        RawPoly p;
        for (const auto& [ma, ca] : terms)
            for (const auto& [mb, cb] : o.terms) p.add(ma.times(mb), ca * cb);
        return p;
    }
};

class PolyParser {
  public:
    PolyParser(const std::string& text, Field field) : s_(text), field_(field) {}

    HomPoly run() {
        skip_ws();
        RawPoly p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        if (p.terms.empty()) return HomPoly::zero(0);
        int deg = p.terms.begin()->first.degree();
        for (const auto& [m, c] : p.terms)
            if (m.degree() != deg)
                throw parse_error("polynomial is not homogeneous (degrees " +
                                      std::to_string(deg) + " and " +
                                      std::to_string(m.degree()) + " both occur)",
                                  0);
        HomPoly out = HomPoly::zero(deg);
        for (const auto& [m, c] : p.terms) out += HomPoly::term(m, c);
        return out;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RawPoly parse_expr() {
        RawPoly acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc + (-parse_term());
            else
                break;
        }
        return acc;
    }

    RawPoly parse_term() {
        RawPoly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        // explicit '*' is mandatory: catch juxtaposition early for a clear error
        char c = peek();
        if (c == 'x' || c == 'y' || c == 'z' || c == 'i' || c == '(' || std::isdigit((unsigned char)c))
            throw parse_error("missing '*' (multiplication must be explicit)", pos_);
        return acc;
    }

    RawPoly parse_factor() {
        RawPoly base = parse_base();
        while (eat('^')) {
            long e = parse_uint("exponent");
            RawPoly p = RawPoly::from_scalar(Scalar(1));
            for (long k = 0; k < e; ++k) p = p * base;
            base = p;
        }
        return base;
    }

    RawPoly parse_base() {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RawPoly p = parse_expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return p;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            RawPoly p;
            p.add({c == 'x', c == 'y', c == 'z'}, Scalar(1));
            return p;
        }
        if (c == 'i') {
            if (field_ == Field::Q)
                throw parse_error("'i' is not allowed over field Q (use --field qi)", pos_);
            ++pos_;
            return RawPoly::from_scalar(Scalar::i());
        }
        if (std::isdigit((unsigned char)c)) {
            Integer num = parse_int();
            if (eat('/')) {
                std::size_t dpos = pos_;
                Integer den = parse_int();
                if (den == 0) throw parse_error("zero denominator", dpos);
                Rational q(num, den);
                q.canonicalize();
                return RawPoly::from_scalar(Scalar(q));
            }
            return RawPoly::from_scalar(Scalar(Rational(num)));
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    Integer parse_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (start == pos_) throw parse_error("expected a number", pos_);
        return Integer(s_.substr(start, pos_ - start));
    }

    long parse_uint(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        Integer v = parse_int();
        if (!v.fits_slong_p()) throw parse_error(std::string(what) + " too large", start);
        return v.get_si();
    }

    const std::string& s_;
    Field field_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a homogeneous polynomial over the given field. Errors carry byte
/// positions; homogeneity is enforced, reducedness is not (see is_squarefree).
inline HomPoly parse_poly(const std::string& text, Field field = Field::QI) {
    return detail::PolyParser(text, field).run();
}

}  // namespace jacsyz
