#pragma once

// Small symbolic layer for catalog tables: multivariate polynomials over Q(i)
// and ratios of them. Just enough to hold coefficients like "1+alpha" or
// "(1+alpha)/(1-alpha)", evaluate them at exact points, and render them in a
// canonical (graded-lex) monomial order for export.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "adw/scalar.hpp"

namespace adw {

using ParamMap = std::map<std::string, Scalar>;

namespace sym {

// Sorted (variable, exponent) pairs; graded-lex order.
using Mono = std::vector<std::pair<std::string, int>>;

struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = 0, db = 0;
        for (auto& [v, e] : a) da += e;
        for (auto& [v, e] : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

class Poly {
public:
    Poly() = default;
    Poly(const Scalar& c) { if (!c.is_zero()) terms_[{}] = c; }  // NOLINT: implicit by design
    Poly(long n) : Poly(Scalar(n)) {}                            // NOLINT: implicit by design

    static Poly var(const std::string& name) {
        Poly p;
        p.terms_[{{name, 1}}] = Scalar(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Scalar constant_value() const {
        if (terms_.empty()) return Scalar(0);
        return terms_.begin()->second;
    }

    Poly operator-() const {
        Poly r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
        return r;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Scalar eval(const ParamMap& params) const {
        Scalar out(0);
        for (auto& [m, c] : terms_) {
            Scalar t = c;
            for (auto& [v, e] : m) {
                auto it = params.find(v);
                if (it == params.end()) throw Error("unbound parameter '" + v + "' in expression");
                for (int n = 0; n < e; ++n) t *= it->second;
            }
            out += t;
        }
        return out;
    }

    void collect_vars(std::set<std::string>& out) const {
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m) out.insert(v);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [m, c] : terms_) {
            std::string mono;
            for (auto& [v, e] : m) {
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            }
            std::string cs = c.str();
            std::string term;
            if (mono.empty()) term = cs;
            else if (cs == "1") term = mono;
            else if (cs == "-1") term = "-" + mono;
            else {
                if (cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos)
                    cs = "(" + cs + ")";
                term = cs + "*" + mono;
            }
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
        return out;
    }

private:
    static Mono mono_mul(const Mono& a, const Mono& b) {
        Mono r = a;
        for (auto& [v, e] : b) {
            bool found = false;
            for (auto& [rv, re] : r)
                if (rv == v) { re += e; found = true; break; }
            if (!found) r.push_back({v, e});
        }
        std::sort(r.begin(), r.end());
        return r;
    }
    void add_term(const Mono& m, const Scalar& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[m] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<Mono, Scalar, MonoLess> terms_;
};

} // namespace sym

// Coefficient expression: a ratio of polynomials (denominator 1 for the
// common polynomial case).
class Expr {
public:
    Expr() : num_(Scalar(0)), den_(Scalar(1)) {}
    Expr(const Scalar& c) : num_(c), den_(Scalar(1)) {}          // NOLINT: implicit by design
    Expr(long n) : num_(Scalar(n)), den_(Scalar(1)) {}           // NOLINT: implicit by design
    Expr(sym::Poly num, sym::Poly den = sym::Poly(Scalar(1))) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("expression with zero denominator");
    }

    static Expr var(const std::string& name) { return Expr(sym::Poly::var(name)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Expr operator-() const { return Expr(-num_, den_); }
    Expr operator+(const Expr& o) const { return Expr(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Expr operator-(const Expr& o) const { return *this + (-o); }
    Expr operator*(const Expr& o) const { return Expr(num_ * o.num_, den_ * o.den_); }
    Expr operator/(const Expr& o) const {
        if (o.num_.is_zero()) throw DivisionByZero("division of expressions by zero");
        return Expr(num_ * o.den_, den_ * o.num_);
    }

    Scalar eval(const ParamMap& params) const {
        Scalar d = den_.eval(params);
        if (d.is_zero()) throw DivisionByZero("expression denominator vanishes at this point: " + str());
        return num_.eval(params) / d;
    }

    std::set<std::string> vars() const {
        std::set<std::string> out;
        num_.collect_vars(out);
        den_.collect_vars(out);
        return out;
    }

    std::string str() const {
        bool den_is_one = den_.is_constant() && den_.constant_value().is_one();
        if (den_is_one) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (n.find('+') != std::string::npos || n.find('-', 1) != std::string::npos) n = "(" + n + ")";
        if (d.find('+') != std::string::npos || d.find('-', 1) != std::string::npos || d.find('*') != std::string::npos)
            d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    sym::Poly num_, den_;
};

// Table-building shorthand.
inline Expr K(long n) { return Expr(n); }
inline Expr K(long num, long den) { return Expr(Scalar(num, den)); }
inline Expr Ki() { return Expr(Scalar::i()); }
inline Expr V(const std::string& name) { return Expr::var(name); }

} // namespace adw
