#pragma once

// Exact arithmetic over the Gaussian rationals Q(i), the ground field of the
// whole workbench. Integer and rational kernels are GMP; everything on top is
// value-semantic and immutable.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "adw/errors.hpp"

namespace adw {

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                                  // NOLINT: implicit by design
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rational from_strings(const std::string& num, const std::string& den) {
        mpz_class n, d;
        if (n.set_str(num, 10) != 0) throw ParseError("bad integer literal: " + num);
        if (d.set_str(den, 10) != 0) throw ParseError("bad integer literal: " + den);
        if (d == 0) throw DivisionByZero("rational with zero denominator");
        Rational r;
        r.q_ = mpq_class(n) / mpq_class(d);
        r.q_.canonicalize();
        return r;
    }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    std::string num_str() const { return q_.get_num().get_str(); }
    std::string den_str() const { return q_.get_den().get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return Rational(mpq_class(q_ / o.q_));
    }

    bool operator==(const Rational& o) const { return q_ == o.q_; }
    bool operator!=(const Rational& o) const { return q_ != o.q_; }
    bool operator<(const Rational& o) const { return q_ < o.q_; }

    // "p" or "p/q"
    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    mpq_class q_;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : re_(n) {}                                   // NOLINT: implicit by design
    Scalar(long num, long den) : re_(num, den) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar operator+(const Scalar& o) const { return Scalar(re_ + o.re_, im_ + o.im_); }
    Scalar operator-(const Scalar& o) const { return Scalar(re_ - o.re_, im_ - o.im_); }
    Scalar operator*(const Scalar& o) const {
        return Scalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    Scalar conj() const { return Scalar(re_, -im_); }
    Scalar inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero scalar");
        Rational n = re_ * re_ + im_ * im_;
        return Scalar(re_ / n, -(im_ / n));
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    // Textual grammar: "p/q", "p/q+r/si", "r/si", with optional signs; "i"
    // abbreviates "1i". parse(render(x)) == x.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (!re_.is_zero()) out = re_.str();
        if (!im_.is_zero()) {
            std::string im;
            if (im_ == Rational(1)) im = "i";
            else if (im_ == Rational(-1)) im = "-i";
            else im = im_.str() + "i";
            if (!out.empty() && im[0] != '-') out += "+";
            out += im;
        }
        return out;
    }

    static Scalar parse(std::string_view text) {
        Parser p{text, 0};
        p.skip_ws();
        Scalar result;
        bool saw_real = false, saw_imag = false;
        Term first = p.term();
        if (first.imaginary) { result = Scalar(Rational(0), first.value); saw_imag = true; }
        else { result = Scalar(first.value, Rational(0)); saw_real = true; }
        p.skip_ws();
        if (!p.done()) {
            char c = p.peek();
            if (c != '+' && c != '-') throw ParseError("unexpected token in scalar: '" + std::string(text) + "'");
            Term second = p.term();
            if (!second.imaginary || saw_imag || !saw_real)
                throw ParseError("malformed scalar (expected a single trailing imaginary part): '" + std::string(text) + "'");
            result = Scalar(result.re(), second.value);
        }
        p.skip_ws();
        if (!p.done()) throw ParseError("trailing characters in scalar: '" + std::string(text) + "'");
        return result;
    }

    // JSON form: four decimal integer strings [re_num, re_den, im_num, im_den].
    std::array<std::string, 4> to_strings() const {
        return {re_.num_str(), re_.den_str(), im_.num_str(), im_.den_str()};
    }
    static Scalar from_strings(const std::array<std::string, 4>& s) {
        return Scalar(Rational::from_strings(s[0], s[1]), Rational::from_strings(s[2], s[3]));
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    struct Term {
        Rational value;
        bool imaginary = false;
    };
    struct Parser {
        std::string_view s;
        size_t pos;
        bool done() const { return pos >= s.size(); }
        char peek() const { return s[pos]; }
        void skip_ws() { while (!done() && (s[pos] == ' ' || s[pos] == '\t')) ++pos; }
        std::string digits() {
            size_t start = pos;
            while (!done() && s[pos] >= '0' && s[pos] <= '9') ++pos;
            if (pos == start) throw ParseError("expected digits in scalar at '" + std::string(s.substr(start)) + "'");
            return std::string(s.substr(start, pos - start));
        }
        Term term() {
            skip_ws();
            bool neg = false;
            if (!done() && (s[pos] == '+' || s[pos] == '-')) { neg = s[pos] == '-'; ++pos; }
            skip_ws();
            if (done()) throw ParseError("empty scalar term in '" + std::string(s) + "'");
            if (s[pos] == 'i') {  // bare "i"
                ++pos;
                return {neg ? Rational(-1) : Rational(1), true};
            }
            std::string num = digits();
            std::string den = "1";
            if (!done() && s[pos] == '/') { ++pos; den = digits(); }
            Rational r = Rational::from_strings(num, den);
            if (neg) r = -r;
            if (!done() && s[pos] == 'i') { ++pos; return {r, true}; }
            return {r, false};
        }
    };

    Rational re_, im_;
};

} // namespace adw
