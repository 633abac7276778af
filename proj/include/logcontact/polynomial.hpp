#ifndef LOGCONTACT_POLYNOMIAL_HPP
#define LOGCONTACT_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logcontact/rational.hpp"

namespace logcontact {

/// Graded lexicographic order on exponent vectors: compare total degree
/// first, then lexicographically (earlier variables weigh more).
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Multivariate polynomial over Q with a fixed ordered variable list.
/// Terms map exponent vectors (one slot per variable) to nonzero rational
/// coefficients; the zero polynomial has an empty term map.
class Polynomial {
public:
    using TermMap = std::map<std::vector<int>, Rational, GradedLexLess>;

    Polynomial() = default;

    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, const Rational& c) {
        Polynomial p(std::move(vars));
        if (c != 0) p.terms_[std::vector<int>(p.vars_.size(), 0)] = c;
        return p;
    }

    static Polynomial variable(std::vector<std::string> vars, std::size_t index) {
        Polynomial p(std::move(vars));
        if (index >= p.vars_.size()) throw ValueError("variable index out of range");
        std::vector<int> e(p.vars_.size(), 0);
        e[index] = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const auto& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw ValueError("polynomial is not constant");
        return terms_.begin()->second;
    }

    /// Constant term (coefficient of the trivial monomial).
    Rational constant_term() const {
        std::vector<int> zero(vars_.size(), 0);
        auto it = terms_.find(zero);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long total_degree() const {
        long d = -1;
        for (const auto& [e, c] : terms_) {
            long s = 0;
            for (int x : e) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    void add_term(std::vector<int> exp, const Rational& c) {
        if (c == 0) return;
        if (exp.size() != vars_.size()) throw InvariantError("exponent vector length mismatch");
        auto [it, inserted] = terms_.try_emplace(std::move(exp), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    Polynomial operator-() const {
        Polynomial r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.require_same_vars(b);
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.require_same_vars(b);
        Polynomial r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_vars(b);
        Polynomial r(a.vars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        }
        return r;
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        Polynomial r(a.vars_);
        if (c == 0) return r;
        for (const auto& [e, k] : a.terms_) r.terms_[e] = k * c;
        return r;
    }

    Polynomial pow(int n) const {
        if (n < 0) throw ValueError("negative polynomial power");
        Polynomial r = constant(vars_, 1);
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        if (var >= vars_.size()) throw ValueError("unknown variable index in derivative");
        Polynomial r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            std::vector<int> e2 = e;
            e2[var] -= 1;
            r.add_term(std::move(e2), c * e[var]);
        }
        return r;
    }

    /// True when every term is divisible by the given variable.
    bool divisible_by_var(std::size_t var) const {
        if (terms_.empty()) return true;
        for (const auto& [e, c] : terms_)
            if (e[var] == 0) return false;
        return true;
    }

    /// Leading term in graded-lex order.
    std::pair<std::vector<int>, Rational> leading_term() const {
        if (terms_.empty()) throw ValueError("zero polynomial has no leading term");
        auto it = std::prev(terms_.end());
        return {it->first, it->second};
    }

    /// Positive rational c with  *this == c * primitive_part,  where the
    /// primitive part has coprime integer coefficients.
    Rational content() const {
        if (terms_.empty()) return Rational(0);
        Int g = 0, l = 1;
        for (const auto& [e, c] : terms_) {
            g = gcd(g, numerator(c) < 0 ? Int(-numerator(c)) : numerator(c));
            l = lcm(l, denominator(c));
        }
        return Rational(g, l);
    }

    Polynomial primitive_part() const {
        if (terms_.empty()) return *this;
        Rational c = content();
        Polynomial r(vars_);
        for (const auto& [e, k] : terms_) r.terms_[e] = k / c;
        return r;
    }

    /// Primitive part with positive leading coefficient.
    Polynomial normalized_primitive() const {
        if (terms_.empty()) return *this;
        Polynomial p = primitive_part();
        if (p.leading_term().second < 0) p = -p;
        return p;
    }

    /// Exact quotient, or nullopt when the division leaves a remainder.
    static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
        a.require_same_vars(b);
        if (b.is_zero()) throw ValueError("polynomial division by zero");
        Polynomial q(a.vars_);
        Polynomial r = a;
        auto [eb, cb] = b.leading_term();
        while (!r.is_zero()) {
            auto [er, cr] = r.leading_term();
            std::vector<int> e(er.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = er[i] - eb[i];
                if (e[i] < 0) return std::nullopt;
            }
            Rational c = cr / cb;
            Polynomial t(a.vars_);
            t.terms_[e] = c;
            q.add_term(std::move(e), c);
            r = r - t * b;
        }
        return q;
    }

    /// Coefficient of var^k, as a polynomial with the var slot zeroed.
    Polynomial coefficient_of(std::size_t var, int k) const {
        Polynomial r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] != k) continue;
            std::vector<int> e2 = e;
            e2[var] = 0;
            r.add_term(std::move(e2), c);
        }
        return r;
    }

    /// Monomial with the per-variable minimum exponents of all terms.
    std::vector<int> monomial_content() const {
        std::vector<int> m(vars_.size(), 0);
        if (terms_.empty()) return m;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = first ? e[i] : std::min(m[i], e[i]);
            first = false;
        }
        return m;
    }

    Polynomial shift_exponents(const std::vector<int>& by, int sign) const {
        Polynomial r(vars_);
        for (const auto& [e, c] : terms_) {
            std::vector<int> e2 = e;
            for (std::size_t i = 0; i < e2.size(); ++i) {
                e2[i] += sign * by[i];
                if (e2[i] < 0) throw InvariantError("negative exponent after shift");
            }
            r.terms_[std::move(e2)] = c;
        }
        return r;
    }

    /// Specialize all variables except `keep` at integer points; returns the
    /// dense univariate coefficient list by degree in `keep`.
    std::vector<Rational> specialize_to_univariate(std::size_t keep,
                                                   const std::vector<Int>& point) const {
        std::vector<Rational> out(static_cast<std::size_t>(std::max(0, degree_in(keep))) + 1,
                                  Rational(0));
        for (const auto& [e, c] : terms_) {
            Rational v = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i == keep || e[i] == 0) continue;
                Int p = 1;
                for (int k = 0; k < e[i]; ++k) p *= point[i];
                v *= Rational(p);
            }
            out[static_cast<std::size_t>(e[keep])] += v;
        }
        return out;
    }

    /// GCD of two polynomials, returned primitive with positive leading
    /// coefficient. Fast paths (monomial content, exact division, a sound
    /// evaluation certificate of coprimality) cover the common cases; the
    /// fallback is a primitive PRS in the lowest-degree shared variable.
    static Polynomial gcd_poly(const Polynomial& a, const Polynomial& b) {
        a.require_same_vars(b);
        if (a.is_zero()) return b.is_zero() ? b : b.normalized_primitive();
        if (b.is_zero()) return a.normalized_primitive();
        Polynomial pa = a.normalized_primitive();
        Polynomial pb = b.normalized_primitive();

        std::vector<int> ma = pa.monomial_content();
        std::vector<int> mb = pb.monomial_content();
        std::vector<int> mg(ma.size());
        for (std::size_t i = 0; i < mg.size(); ++i) mg[i] = std::min(ma[i], mb[i]);
        pa = pa.shift_exponents(ma, -1);
        pb = pb.shift_exponents(mb, -1);
        Polynomial mono(a.vars_);
        mono.terms_[mg] = 1;

        Polynomial core = gcd_core(pa, pb);
        return (core * mono).normalized_primitive();
    }

    std::string str() const;   // defined in parse.hpp (shared renderer)

private:
    void require_same_vars(const Polynomial& other) const {
        if (vars_ != other.vars_) throw ValueError("polynomial variable universes differ");
    }

    /// Core GCD on primitive monomial-free inputs.
    static Polynomial gcd_core(const Polynomial& a, const Polynomial& b) {
        if (a.is_constant() || b.is_constant()) return constant(a.vars_, 1);
        if (a == b) return a;
        {
            Polynomial na = -a;
            if (na == b) return a.normalized_primitive();
        }
        if (divide_exact(a, b).has_value()) return b.normalized_primitive();
        if (divide_exact(b, a).has_value()) return a.normalized_primitive();

        std::vector<std::size_t> shared;
        std::size_t best = 0;
        int best_deg = -1;
        for (std::size_t i = 0; i < a.vars_.size(); ++i) {
            int da = a.degree_in(i), db = b.degree_in(i);
            if (da > 0 && db > 0) {
                shared.push_back(i);
                int d = std::min(da, db);
                if (best_deg < 0 || d < best_deg) {
                    best_deg = d;
                    best = i;
                }
            } else if (da > 0 || db > 0) {
                // the variable appears in only one input, so the gcd is free
                // of it; split it off by recursing on the coefficient list
                const Polynomial& has = da > 0 ? a : b;
                const Polynomial& other = da > 0 ? b : a;
                Polynomial g = other;
                for (int k = 0; k <= has.degree_in(i) && !g.is_constant(); ++k) {
                    Polynomial ck = has.coefficient_of(i, k);
                    if (!ck.is_zero()) g = gcd_poly(g, ck);
                }
                return g.normalized_primitive();
            }
        }
        if (shared.empty()) return constant(a.vars_, 1);
        if (certified_coprime(a, b, shared)) return constant(a.vars_, 1);
        return gcd_prs(a, b, best);
    }

    /// Sound coprimality certificate: for each shared variable v, evaluate
    /// the other variables at a point where the leading v-coefficient of one
    /// input survives; a constant univariate gcd then bounds the v-degree of
    /// the gcd by zero. Never claims coprimality wrongly; may fail to decide.
    static bool certified_coprime(const Polynomial& a, const Polynomial& b,
                                  const std::vector<std::size_t>& shared) {
        std::uint64_t state = 0x9e3779b97f4a7c15ull;
        auto next = [&state]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (std::size_t v : shared) {
            bool certified = false;
            for (int attempt = 0; attempt < 4 && !certified; ++attempt) {
                std::vector<Int> pt(a.vars_.size(), Int(0));
                for (std::size_t i = 0; i < pt.size(); ++i)
                    pt[i] = Int(static_cast<long>(next() % 19) - 9);
                std::vector<Rational> ua = a.specialize_to_univariate(v, pt);
                std::vector<Rational> ub = b.specialize_to_univariate(v, pt);
                // degree must not drop, otherwise the bound is not valid
                if (ua.back() == 0 && ub.back() == 0) continue;
                if (ua.back() == 0) std::swap(ua, ub);
                if (ua.back() == 0) continue;
                if (univariate_gcd_degree(ua, ub) == 0) certified = true;
            }
            if (!certified) return false;
        }
        return true;
    }

    static int univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
        auto trim = [](std::vector<Rational>& p) {
            while (!p.empty() && p.back() == 0) p.pop_back();
        };
        trim(a);
        trim(b);
        while (!b.empty()) {
            // a mod b
            while (a.size() >= b.size() && !a.empty()) {
                Rational q = a.back() / b.back();
                std::size_t off = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
                trim(a);
            }
            std::swap(a, b);
        }
        return static_cast<int>(a.size()) - 1;
    }

    /// Primitive PRS in the main variable v; contents go through gcd_poly so
    /// every recursion level benefits from the fast paths.
    static Polynomial gcd_prs(const Polynomial& a, const Polynomial& b, std::size_t v) {
        auto content_wrt = [v](const Polynomial& p) {
            Polynomial c(p.vars_);
            for (int k = 0; k <= p.degree_in(v); ++k) {
                if (!c.is_zero() && c.is_constant()) break;
                Polynomial ck = p.coefficient_of(v, k);
                if (!ck.is_zero()) c = gcd_poly(c, ck);
            }
            return c;
        };
        Polynomial ca = content_wrt(a), cb = content_wrt(b);
        Polynomial pa = *divide_exact(a, ca), pb = *divide_exact(b, cb);
        Polynomial cg = gcd_poly(ca, cb);
        if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
        while (!pb.is_zero()) {
            Polynomial r = pseudo_remainder(pa, pb, v);
            pa = pb;
            if (r.is_zero()) {
                pb = r;
                break;
            }
            if (r.degree_in(v) <= 0) {
                // coprime in v: the gcd carries no v at all
                return cg.normalized_primitive();
            }
            Polynomial rc = content_wrt(r);
            pb = *divide_exact(r, rc);
        }
        if (pa.degree_in(v) <= 0) return cg.normalized_primitive();
        Polynomial pc = content_wrt(pa);
        return (cg * *divide_exact(pa, pc)).normalized_primitive();
    }

    static Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t v) {
        int db = b.degree_in(v);
        Polynomial lb = b.coefficient_of(v, db);
        while (!a.is_zero() && a.degree_in(v) >= db) {
            int da = a.degree_in(v);
            Polynomial la = a.coefficient_of(v, da);
            Polynomial shift(a.vars_);
            std::vector<int> e(a.vars_.size(), 0);
            e[v] = da - db;
            shift.terms_[std::move(e)] = 1;
            a = a * lb - b * shift * la;
        }
        return a;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

} // namespace logcontact

#endif
