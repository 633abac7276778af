#ifndef LOGCONTACT_RATIONAL_FUNCTION_HPP
#define LOGCONTACT_RATIONAL_FUNCTION_HPP

#include <map>
#include <string>
#include <vector>

#include "logcontact/polynomial.hpp"

namespace logcontact {

/// Exact fraction of multivariate polynomials over Q, kept in canonical
/// form: numerator and denominator coprime, denominator primitive with
/// integer coefficients and positive leading coefficient (graded-lex).
class RationalFunction {
public:
    RationalFunction() = default;

    explicit RationalFunction(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::constant(num_.vars(), 1)) {}

    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ValueError("rational function with zero denominator");
        canonicalize();
    }

    static RationalFunction constant(std::vector<std::string> vars, const Rational& c) {
        return RationalFunction(Polynomial::constant(std::move(vars), c));
    }

    static RationalFunction variable(std::vector<std::string> vars, std::size_t index) {
        return RationalFunction(Polynomial::variable(std::move(vars), index));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }

    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Rational constant_value() const {
        if (!is_constant()) throw ValueError("rational function is not constant");
        return num_.constant_value() / den_.constant_value();
    }

    bool is_one() const { return is_constant() && !is_zero() && constant_value() == 1; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    // Arithmetic keeps results canonical with small gcds only (Henrici's
    // reductions), relying on the operands being canonical already.

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        a.require_same_universe(b);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Polynomial g = Polynomial::gcd_poly(a.den_, b.den_);
        RationalFunction r;
        if (g.is_constant()) {
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            r.normalize_scalar_only();
            return r;
        }
        Polynomial ad = *Polynomial::divide_exact(a.den_, g);
        Polynomial bd = *Polynomial::divide_exact(b.den_, g);
        Polynomial t = a.num_ * bd + b.num_ * ad;
        Polynomial h = Polynomial::gcd_poly(t, g);
        if (!h.is_constant()) {
            t = *Polynomial::divide_exact(t, h);
            g = *Polynomial::divide_exact(g, h);
        }
        r.num_ = t;
        r.den_ = ad * g * bd;
        r.normalize_scalar_only();
        return r;
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        a.require_same_universe(b);
        if (a.is_zero() || b.is_zero()) return constant(a.vars(), 0);
        Polynomial g1 = Polynomial::gcd_poly(a.num_, b.den_);
        Polynomial g2 = Polynomial::gcd_poly(b.num_, a.den_);
        RationalFunction r;
        Polynomial an = g1.is_constant() ? a.num_ : *Polynomial::divide_exact(a.num_, g1);
        Polynomial bd = g1.is_constant() ? b.den_ : *Polynomial::divide_exact(b.den_, g1);
        Polynomial bn = g2.is_constant() ? b.num_ : *Polynomial::divide_exact(b.num_, g2);
        Polynomial ad = g2.is_constant() ? a.den_ : *Polynomial::divide_exact(a.den_, g2);
        r.num_ = an * bn;
        r.den_ = ad * bd;
        r.normalize_scalar_only();
        return r;
    }

    /// Canonical inverse: swap and renormalize the scalar part.
    RationalFunction inverse() const {
        if (is_zero()) throw ValueError("inverse of zero rational function");
        RationalFunction r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_scalar_only();
        return r;
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw ValueError("division by zero rational function");
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    friend RationalFunction operator*(const RationalFunction& a, const Rational& c) {
        if (c == 0) return constant(a.vars(), 0);
        RationalFunction r;
        r.num_ = a.num_ * c;
        r.den_ = a.den_;
        return r;
    }

    RationalFunction pow(int n) const {
        if (n < 0) {
            if (is_zero()) throw ValueError("negative power of zero");
            return constant(vars(), 1) / pow(-n);
        }
        RationalFunction r = constant(vars(), 1);
        RationalFunction base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    /// Quotient-rule partial derivative with respect to a named variable.
    RationalFunction derivative(const std::string& var) const {
        return derivative(var_index(var));
    }

    RationalFunction derivative(std::size_t var) const {
        if (var >= vars().size()) throw ValueError("unknown variable in derivative");
        if (den_.is_constant())
            return RationalFunction(num_.derivative(var) * (Rational(1) / den_.constant_value()));
        Polynomial t = num_.derivative(var) * den_ - num_ * den_.derivative(var);
        Polynomial g = Polynomial::gcd_poly(t, den_);
        if (!g.is_constant())
            return RationalFunction(*Polynomial::divide_exact(t, g),
                                    *Polynomial::divide_exact(den_, g) * den_);
        return RationalFunction(t, den_ * den_);
    }

    /// Composition: every variable must have an image defined over a common
    /// target universe. Throws when the denominator collapses to zero.
    RationalFunction substitute(const std::vector<RationalFunction>& images) const {
        if (images.size() != vars().size())
            throw ValueError("substitution must cover every variable");
        std::vector<std::string> target =
            images.empty() ? vars() : images.front().vars();
        for (const auto& im : images)
            if (im.vars() != target) throw ValueError("substitution images on mixed universes");
        RationalFunction n = eval_poly(num_, images, target);
        RationalFunction d = eval_poly(den_, images, target);
        if (d.is_zero()) throw ValueError("substitution makes denominator identically zero");
        return n / d;
    }

    std::size_t var_index(const std::string& name) const {
        const auto& vs = vars();
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (vs[i] == name) return i;
        throw ValueError("unknown variable '" + name + "'");
    }

    /// Reinterpret on a larger variable universe (old variables must appear,
    /// order among them may change); re-canonicalizes under the new order.
    RationalFunction embed(const std::vector<std::string>& bigger) const {
        std::vector<std::size_t> where(vars().size());
        for (std::size_t i = 0; i < vars().size(); ++i) {
            auto it = std::find(bigger.begin(), bigger.end(), vars()[i]);
            if (it == bigger.end())
                throw ValueError("embedding drops variable '" + vars()[i] + "'");
            where[i] = static_cast<std::size_t>(it - bigger.begin());
        }
        auto embed_poly = [&](const Polynomial& p) {
            Polynomial r(bigger);
            for (const auto& [e, c] : p.terms()) {
                std::vector<int> e2(bigger.size(), 0);
                for (std::size_t i = 0; i < e.size(); ++i) e2[where[i]] = e[i];
                r.add_term(std::move(e2), c);
            }
            return r;
        };
        return RationalFunction(embed_poly(num_), embed_poly(den_));
    }

    /// Exact equality test after embedding both sides into the merged
    /// variable universe.
    static bool equal(const RationalFunction& f, const RationalFunction& g) {
        if (f.vars() == g.vars()) return f == g;
        std::vector<std::string> merged = f.vars();
        for (const auto& v : g.vars())
            if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
        return f.embed(merged) == g.embed(merged);
    }

    std::string str() const;   // defined in parse.hpp

private:
    void require_same_universe(const RationalFunction& b) const {
        if (vars() != b.vars()) throw ValueError("rational functions on different universes");
    }

    /// Make the denominator primitive-integer with a positive leading
    /// coefficient, folding scalars into the numerator. Used after
    /// operations that already guarantee numerator and denominator coprime.
    void normalize_scalar_only() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(num_.vars(), 1);
            return;
        }
        Rational c = den_.content();
        Polynomial d = den_.primitive_part();
        if (d.leading_term().second < 0) {
            d = -d;
            c = -c;
        }
        den_ = std::move(d);
        if (c != 1) num_ = num_ * (Rational(1) / c);
    }

    static RationalFunction eval_poly(const Polynomial& p,
                                      const std::vector<RationalFunction>& images,
                                      const std::vector<std::string>& target) {
        RationalFunction acc = constant(target, 0);
        for (const auto& [e, c] : p.terms()) {
            RationalFunction t = constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t = t * images[i].pow(e[i]);
            acc = acc + t;
        }
        return acc;
    }

    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(num_.vars(), 1);
            return;
        }
        Polynomial pn = num_.normalized_primitive();
        Polynomial pd = den_.normalized_primitive();
        Polynomial g = Polynomial::gcd_poly(pn, pd);
        if (!g.is_constant()) {
            pn = *Polynomial::divide_exact(pn, g);
            pd = *Polynomial::divide_exact(pd, g);
        }
        // carry the scalar on the numerator; the denominator stays a
        // positive-leading primitive integer polynomial
        Rational scale = num_.content() / den_.content();
        if (num_.leading_term().second < 0) scale = -scale;
        if (den_.leading_term().second < 0) scale = -scale;
        num_ = pn * scale;
        den_ = pd;
    }

    Polynomial num_;
    Polynomial den_;
};

} // namespace logcontact

#endif
