#ifndef LOGCONTACT_LOG_FORM_HPP
#define LOGCONTACT_LOG_FORM_HPP

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logcontact/chart.hpp"

namespace logcontact {

/// Log vector field written against the log frame: the coefficient at a
/// boundary coordinate x multiplies x*d/dx, at a free coordinate d/dx.
class LogVectorField {
public:
    explicit LogVectorField(Chart chart) : chart_(std::move(chart)) {}

    const Chart& chart() const { return chart_; }

    void set(std::size_t i, RationalFunction f) {
        if (i >= chart_.dim()) throw ValueError("field coefficient index out of range");
        if (f.vars() != chart_.vars()) throw ValueError("field coefficient on wrong universe");
        if (f.is_zero())
            coeffs_.erase(i);
        else
            coeffs_[i] = std::move(f);
    }

    void set(const std::string& var, const RationalFunction& f) { set(chart_.index(var), f); }

    RationalFunction coeff(std::size_t i) const {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? chart_.constant(0) : it->second;
    }

    bool is_zero() const { return coeffs_.empty(); }

    const std::map<std::size_t, RationalFunction>& coeffs() const { return coeffs_; }

    /// Derivation applied to a function: boundary frame vectors act as
    /// x*d/dx, free ones as d/dx.
    RationalFunction apply(const RationalFunction& f) const {
        RationalFunction r = chart_.constant(0);
        for (const auto& [i, c] : coeffs_) {
            RationalFunction d = f.derivative(i);
            if (chart_.is_boundary(i)) d = d * chart_.coordinate(i);
            r += c * d;
        }
        return r;
    }

    friend LogVectorField operator+(const LogVectorField& a, const LogVectorField& b) {
        if (!(a.chart_ == b.chart_)) throw ValueError("chart mismatch");
        LogVectorField r = a;
        for (const auto& [i, c] : b.coeffs_) r.set(i, r.coeff(i) + c);
        return r;
    }

    friend LogVectorField operator*(const LogVectorField& a, const RationalFunction& f) {
        LogVectorField r(a.chart_);
        for (const auto& [i, c] : a.coeffs_) r.set(i, c * f);
        return r;
    }

    friend bool operator==(const LogVectorField& a, const LogVectorField& b) {
        return a.chart_ == b.chart_ && a.coeffs_ == b.coeffs_;
    }

private:
    Chart chart_;
    std::map<std::size_t, RationalFunction> coeffs_;
};

/// Commutator of two log fields. All frame brackets vanish, so the result
/// is sum_j (X(g_j) - Y(f_j)) e_j, which is again a log field.
inline LogVectorField lie_bracket(const LogVectorField& X, const LogVectorField& Y) {
    if (!(X.chart() == Y.chart())) throw ValueError("chart mismatch in Lie bracket");
    LogVectorField r(X.chart());
    for (std::size_t j = 0; j < X.chart().dim(); ++j) {
        RationalFunction c = X.apply(Y.coeff(j)) - Y.apply(X.coeff(j));
        r.set(j, c);
    }
    return r;
}

/// Logarithmic differential form on a chart. Terms map strictly increasing
/// index tuples of basis covectors (dlog x for boundary coordinates, dx
/// otherwise) to rational-function coefficients regular along the boundary.
/// `value_weight` marks the multiplicative-group weight of the line-bundle
/// value; 0 means a plain form.
class LogForm {
public:
    using TermMap = std::map<std::vector<std::size_t>, RationalFunction>;

    LogForm(Chart chart, int degree, int value_weight = 0)
        : chart_(std::move(chart)), degree_(degree), value_weight_(value_weight) {
        if (degree_ < 0) throw ValueError("negative form degree");
    }

    static LogForm zero(const Chart& chart, int degree, int value_weight = 0) {
        return LogForm(chart, degree, value_weight);
    }

    static LogForm function(const Chart& chart, RationalFunction f) {
        LogForm a(chart, 0);
        a.add_term({}, std::move(f));
        return a;
    }

    /// The basis covector attached to coordinate i (dlog or plain d).
    static LogForm basis_covector(const Chart& chart, std::size_t i) {
        LogForm a(chart, 1);
        a.add_term({i}, chart.constant(1));
        return a;
    }

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    int value_weight() const { return value_weight_; }
    LogForm& set_value_weight(int w) {
        value_weight_ = w;
        return *this;
    }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(std::vector<std::size_t> covectors, RationalFunction coeff) {
        if (coeff.vars() != chart_.vars())
            coeff = coeff.embed(chart_.vars());
        if (static_cast<int>(covectors.size()) != degree_)
            throw ValueError("covector tuple length does not match form degree");
        for (std::size_t i = 0; i < covectors.size(); ++i) {
            if (covectors[i] >= chart_.dim()) throw ValueError("covector index out of range");
            if (i + 1 < covectors.size() && covectors[i] >= covectors[i + 1])
                throw ValueError("covector tuple must be strictly increasing");
        }
        if (coeff.is_zero()) return;
        if (!chart_.is_regular(coeff))
            throw InvariantError("log form coefficient has a pole along the boundary");
        auto [it, inserted] = terms_.try_emplace(std::move(covectors), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Add a possibly unsorted wedge of basis covectors with the sign of the
    /// sorting permutation; repeated covectors contribute zero.
    void add_term_signed(std::vector<std::size_t> covectors, RationalFunction coeff) {
        int sign = 1;
        for (std::size_t i = 1; i < covectors.size(); ++i) {
            std::size_t j = i;
            while (j > 0 && covectors[j - 1] > covectors[j]) {
                std::swap(covectors[j - 1], covectors[j]);
                sign = -sign;
                --j;
            }
        }
        for (std::size_t i = 1; i < covectors.size(); ++i)
            if (covectors[i - 1] == covectors[i]) return;
        if (sign < 0) coeff = -coeff;
        add_term(std::move(covectors), std::move(coeff));
    }

    friend bool operator==(const LogForm& a, const LogForm& b) {
        return a.chart_ == b.chart_ && a.degree_ == b.degree_ &&
               a.value_weight_ == b.value_weight_ && a.terms_ == b.terms_;
    }

    friend LogForm operator+(const LogForm& a, const LogForm& b) {
        a.require_compatible(b);
        LogForm r = a;
        for (const auto& [cov, c] : b.terms_) r.add_term(cov, c);
        return r;
    }

    friend LogForm operator-(const LogForm& a, const LogForm& b) {
        a.require_compatible(b);
        LogForm r = a;
        for (const auto& [cov, c] : b.terms_) r.add_term(cov, -c);
        return r;
    }

    LogForm operator-() const {
        LogForm r(chart_, degree_, value_weight_);
        for (const auto& [cov, c] : terms_) r.terms_[cov] = -c;
        return r;
    }

    friend LogForm operator*(const LogForm& a, const RationalFunction& f) {
        LogForm r(a.chart_, a.degree_, a.value_weight_);
        for (const auto& [cov, c] : a.terms_) {
            RationalFunction p = c * f;
            if (!p.is_zero()) r.add_term(cov, p);
        }
        return r;
    }

    friend LogForm operator*(const LogForm& a, const Rational& k) {
        return a * RationalFunction::constant(a.chart_.vars(), k);
    }

private:
    void require_compatible(const LogForm& b) const {
        if (!(chart_ == b.chart_)) throw ValueError("chart mismatch");
        if (degree_ != b.degree_) throw ValueError("degree mismatch");
        if (value_weight_ != b.value_weight_) throw ValueError("value weight mismatch");
    }

    Chart chart_;
    int degree_;
    int value_weight_;
    TermMap terms_;
};

/// Graded-anticommutative product with Koszul signs from the tuple merges.
inline LogForm wedge(const LogForm& a, const LogForm& b) {
    if (!(a.chart() == b.chart())) throw ValueError("chart mismatch in wedge");
    LogForm r(a.chart(), a.degree() + b.degree(), a.value_weight() + b.value_weight());
    for (const auto& [ca, fa] : a.terms()) {
        for (const auto& [cb, fb] : b.terms()) {
            std::vector<std::size_t> merged = ca;
            merged.insert(merged.end(), cb.begin(), cb.end());
            r.add_term_signed(std::move(merged), fa * fb);
        }
    }
    return r;
}

inline LogForm wedge_power(const LogForm& a, int n) {
    if (n < 0) throw ValueError("negative wedge power");
    LogForm r = LogForm::function(a.chart(), a.chart().constant(1));
    r.set_value_weight(0);
    for (int i = 0; i < n; ++i) r = wedge(r, a);
    return r;
}

/// Differential of a coefficient function in the log basis:
/// df = sum over boundary x of (x df/dx) dlog x + sum over free x of (df/dx) dx.
inline LogForm log_differential(const Chart& chart, const RationalFunction& f) {
    LogForm r(chart, 1);
    for (std::size_t i = 0; i < chart.dim(); ++i) {
        RationalFunction d = f.derivative(i);
        if (chart.is_boundary(i)) d = d * chart.coordinate(i);
        if (!d.is_zero()) r.add_term({i}, d);
    }
    return r;
}

/// Exterior derivative: d(f beta) = df wedge beta; basis covectors are closed.
inline LogForm exterior_derivative(const LogForm& a) {
    LogForm r(a.chart(), a.degree() + 1, a.value_weight());
    for (const auto& [cov, f] : a.terms()) {
        LogForm df = log_differential(a.chart(), f);
        for (const auto& [di, dc] : df.terms()) {
            std::vector<std::size_t> merged = {di[0]};
            merged.insert(merged.end(), cov.begin(), cov.end());
            r.add_term_signed(std::move(merged), dc);
        }
    }
    return r;
}

inline RationalFunction det(std::vector<std::vector<RationalFunction>> m, const Chart& chart) {
    const std::size_t n = m.size();
    if (n == 0) return chart.constant(1);
    // fraction-free is unnecessary at these sizes; cofactor expansion
    if (n == 1) return m[0][0];
    RationalFunction r = chart.constant(0);
    Rational sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (!m[0][j].is_zero()) {
            std::vector<std::vector<RationalFunction>> sub;
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<RationalFunction> row;
                for (std::size_t l = 0; l < n; ++l)
                    if (l != j) row.push_back(m[i][l]);
                sub.push_back(std::move(row));
            }
            r += m[0][j] * det(std::move(sub), chart) * sign;
        }
        sign = -sign;
    }
    return r;
}

/// Alternating multilinear evaluation of a k-form on k log fields; the log
/// frame is dual to the log covector basis.
inline RationalFunction evaluate(const LogForm& a, const std::vector<LogVectorField>& fields) {
    if (fields.size() != static_cast<std::size_t>(a.degree()))
        throw ValueError("arity mismatch in evaluation");
    for (const auto& X : fields)
        if (!(X.chart() == a.chart())) throw ValueError("chart mismatch in evaluation");
    RationalFunction total = a.chart().constant(0);
    const std::size_t k = fields.size();
    for (const auto& [cov, f] : a.terms()) {
        // det of the k x k pairing matrix  M[i][j] = <covector i, field j>
        std::vector<std::vector<RationalFunction>> m(k, std::vector<RationalFunction>());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) m[i].push_back(fields[j].coeff(cov[i]));
        total += f * det(m, a.chart());
    }
    return total;
}

/// Both sides of the dual exterior-derivative formula
///   (d eta)(X, Y) = X(eta(Y)) - Y(eta(X)) - eta([X, Y])
/// computed along independent paths; callers assert equality.
inline std::pair<RationalFunction, RationalFunction> dual_formula_check(const LogForm& eta,
                                                                        const LogVectorField& X,
                                                                        const LogVectorField& Y) {
    if (eta.degree() != 1) throw ValueError("dual formula needs a 1-form");
    RationalFunction lhs = evaluate(exterior_derivative(eta), {X, Y});
    RationalFunction eY = evaluate(eta, {Y});
    RationalFunction eX = evaluate(eta, {X});
    RationalFunction rhs = X.apply(eY) - Y.apply(eX) - evaluate(eta, {lie_bracket(X, Y)});
    return {lhs, rhs};
}

struct ContactReport {
    RationalFunction top_coefficient;
    bool is_contact = false;
    bool degenerate_rank = false;   // r = 0 smoke-test case
    bool via_cone = false;          // computed on the 2r+2 homogeneity chart
};

struct SymplecticReport {
    RationalFunction top_coefficient;
    bool closed = false;
    bool is_symplectic = false;
};

inline std::optional<Rational> nonzero_constant(const RationalFunction& f) {
    if (!f.is_constant() || f.is_zero()) return std::nullopt;
    return f.constant_value();
}

inline RationalFunction top_coefficient(const LogForm& a) {
    std::vector<std::size_t> full(a.chart().dim());
    std::iota(full.begin(), full.end(), 0);
    auto it = a.terms().find(full);
    return it == a.terms().end() ? a.chart().constant(0) : it->second;
}

/// Top power test for a closed 2-form on a 2n-dimensional chart: reports the
/// coefficient of the full ordered basis wedge of omega^n.
inline SymplecticReport symplectic_check(const LogForm& omega, int n, int orientation = 1) {
    if (omega.degree() != 2) throw ValueError("symplectic check needs a 2-form");
    if (omega.chart().dim() != static_cast<std::size_t>(2 * n))
        throw ValueError("symplectic check: chart dimension must be 2n");
    SymplecticReport rep;
    rep.closed = exterior_derivative(omega).is_zero();
    rep.top_coefficient = top_coefficient(wedge_power(omega, n)) * Rational(orientation);
    rep.is_symplectic = rep.closed && nonzero_constant(rep.top_coefficient).has_value();
    return rep;
}

/// Nondegeneracy test for a contact 1-form.
///
/// On a (2r+1)-dimensional chart this is the top coefficient of
/// theta wedge (d theta)^r. The constructions in this library produce their
/// contact forms on the (2r+2)-dimensional homogeneity chart (the total
/// space before passing to the projective quotient); there the equivalent
/// test is the top coefficient of (d theta)^(r+1), which the report flags
/// with `via_cone`. A nonzero constant certifies nondegeneracy; non-constant
/// nonvanishing units are out of scope and reported as indeterminate.
inline ContactReport contact_check(const LogForm& theta, int r, int orientation = 1) {
    if (theta.degree() != 1) throw ValueError("contact check needs a 1-form");
    if (r < 0) throw ValueError("negative contact rank");
    const std::size_t dim = theta.chart().dim();
    ContactReport rep;
    rep.degenerate_rank = (r == 0);
    if (dim == static_cast<std::size_t>(2 * r + 1)) {
        LogForm top = wedge(theta, wedge_power(exterior_derivative(theta), r));
        rep.top_coefficient = top_coefficient(top) * Rational(orientation);
    } else if (dim == static_cast<std::size_t>(2 * r + 2)) {
        rep.via_cone = true;
        LogForm top = wedge_power(exterior_derivative(theta), r + 1);
        rep.top_coefficient = top_coefficient(top) * Rational(orientation);
    } else {
        throw ValueError("contact check: chart dimension must be 2r+1 or 2r+2");
    }
    rep.is_contact = nonzero_constant(rep.top_coefficient).has_value();
    return rep;
}

} // namespace logcontact

#endif
