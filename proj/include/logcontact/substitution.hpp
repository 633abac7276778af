#ifndef LOGCONTACT_SUBSTITUTION_HPP
#define LOGCONTACT_SUBSTITUTION_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "logcontact/log_form.hpp"

namespace logcontact {

/// Image of a boundary coordinate under a chart transition: a unit times a
/// monomial in the source boundary coordinates, so dlog pulls back into the
/// log module. Exponents may be negative.
struct UnitMonomial {
    RationalFunction unit;
    std::map<std::size_t, int> exponents;   // source boundary var index -> power

    bool operator==(const UnitMonomial&) const = default;
};

/// Coordinate substitution between charts. Images send each target
/// coordinate to an expression in the source coordinates; boundary targets
/// must map to unit monomials.
class Substitution {
public:
    using Image = std::variant<UnitMonomial, RationalFunction>;

    Substitution(Chart source, Chart target)
        : source_(std::move(source)), target_(std::move(target)) {}

    static Substitution identity(const Chart& chart) {
        Substitution s(chart, chart);
        for (std::size_t i = 0; i < chart.dim(); ++i) {
            if (chart.is_boundary(i)) {
                UnitMonomial um;
                um.unit = chart.constant(1);
                um.exponents[i] = 1;
                s.set_boundary_image(i, std::move(um));
            } else {
                s.set_image(i, chart.coordinate(i));
            }
        }
        return s;
    }

    const Chart& source() const { return source_; }
    const Chart& target() const { return target_; }

    void set_image(const std::string& target_var, const RationalFunction& f) {
        set_image(target_.index(target_var), f);
    }

    void set_image(std::size_t target_var, const RationalFunction& f) {
        if (target_.is_boundary(target_var))
            throw ValueError("boundary coordinate needs a unit-monomial image");
        if (f.vars() != source_.vars()) throw ValueError("image on wrong source universe");
        images_[target_var] = f;
    }

    void set_boundary_image(const std::string& target_var, UnitMonomial um) {
        set_boundary_image(target_.index(target_var), std::move(um));
    }

    void set_boundary_image(std::size_t target_var, UnitMonomial um) {
        if (!target_.is_boundary(target_var))
            throw ValueError("unit-monomial image is only for boundary coordinates");
        if (um.unit.vars() != source_.vars()) throw ValueError("unit on wrong source universe");
        if (!source_.is_unit(um.unit))
            throw ValueError("image of boundary coordinate '" + target_.vars()[target_var] +
                             "' has a non-unit factor");
        for (const auto& [i, e] : um.exponents) {
            if (i >= source_.dim() || !source_.is_boundary(i))
                throw ValueError("monomial factor must be a source boundary coordinate");
            (void)e;
        }
        images_[target_var] = std::move(um);
    }

    const Image& image(std::size_t target_var) const {
        auto it = images_.find(target_var);
        if (it == images_.end())
            throw ValueError("no image for target coordinate '" + target_.vars()[target_var] + "'");
        return it->second;
    }

    /// Image as a plain rational function on the source chart.
    RationalFunction image_as_function(std::size_t target_var) const {
        const Image& im = image(target_var);
        if (std::holds_alternative<RationalFunction>(im)) return std::get<RationalFunction>(im);
        const auto& um = std::get<UnitMonomial>(im);
        RationalFunction r = um.unit;
        for (const auto& [i, e] : um.exponents) r = r * source_.coordinate(i).pow(e);
        return r;
    }

    bool complete() const { return images_.size() == target_.dim(); }

    /// Apply to a function on the target chart.
    RationalFunction apply(const RationalFunction& f) const {
        if (f.vars() != target_.vars()) throw ValueError("function on wrong target universe");
        std::vector<RationalFunction> images;
        for (std::size_t i = 0; i < target_.dim(); ++i) images.push_back(image_as_function(i));
        return f.substitute(images);
    }

    /// Composition: (s2 after s1) maps s2's target into s1's source, where
    /// s1.target == s2.source.
    static Substitution compose(const Substitution& inner, const Substitution& outer) {
        if (!(inner.target() == outer.source()))
            throw ValueError("substitution composition: chart mismatch");
        Substitution s(inner.source(), outer.target());
        for (std::size_t i = 0; i < outer.target().dim(); ++i) {
            const Image& im = outer.image(i);
            if (std::holds_alternative<RationalFunction>(im)) {
                s.set_image(i, inner.apply(std::get<RationalFunction>(im)));
            } else {
                const auto& um = std::get<UnitMonomial>(im);
                UnitMonomial out;
                out.unit = inner.apply(um.unit);
                for (const auto& [j, e] : um.exponents) {
                    const Image& jm = inner.image(j);
                    if (!std::holds_alternative<UnitMonomial>(jm))
                        throw ValueError("composed boundary image is not a unit monomial");
                    const auto& um2 = std::get<UnitMonomial>(jm);
                    out.unit = out.unit * um2.unit.pow(e);
                    for (const auto& [l, e2] : um2.exponents) {
                        out.exponents[l] += e * e2;
                        if (out.exponents[l] == 0) out.exponents.erase(l);
                    }
                }
                s.set_boundary_image(i, std::move(out));
            }
        }
        return s;
    }

private:
    Chart source_;
    Chart target_;
    std::map<std::size_t, Image> images_;
};

/// Pullback of a basis covector of the target chart:
///   dlog(u * prod x^m) = du/u + sum m_j dlog x_j,
///   dx  |->  d(image)  in the source log basis.
inline LogForm pullback_covector(const Substitution& s, std::size_t target_var) {
    const Chart& src = s.source();
    if (s.target().is_boundary(target_var)) {
        const auto& um = std::get<UnitMonomial>(s.image(target_var));
        LogForm r(src, 1);
        // du/u stays regular because u is a unit
        RationalFunction u = um.unit;
        for (std::size_t i = 0; i < src.dim(); ++i) {
            RationalFunction d = u.derivative(i) / u;
            if (src.is_boundary(i)) d = d * src.coordinate(i);
            if (!d.is_zero()) r.add_term({i}, d);
        }
        for (const auto& [j, e] : um.exponents)
            if (e != 0) r.add_term({j}, src.constant(e));
        return r;
    }
    return log_differential(src, s.image_as_function(target_var));
}

/// Pullback of a log form along a substitution; commutes with wedge and d.
inline LogForm pullback(const LogForm& a, const Substitution& s) {
    if (!(a.chart() == s.target())) throw ValueError("form does not live on the target chart");
    if (!s.complete()) throw ValueError("substitution does not cover every target coordinate");
    LogForm r(s.source(), a.degree(), a.value_weight());
    for (const auto& [cov, f] : a.terms()) {
        LogForm part = LogForm::function(s.source(), s.apply(f));
        for (std::size_t i : cov) part = wedge(part, pullback_covector(s, i));
        part.set_value_weight(a.value_weight());
        r = r + part;
    }
    return r;
}

/// Homogeneity weight of a form under the scaling action encoded in the
/// chart weights: substitutes x -> u^w(x) * x for a fresh coordinate u and
/// returns k when the pullback equals u^k times the form; nullopt when the
/// form is inhomogeneous.
inline std::optional<int> scale_weight(const LogForm& a) {
    const Chart& c = a.chart();
    std::string u = "u";
    while (c.has_var(u)) u += "_";
    std::vector<std::string> vars = c.vars();
    vars.push_back(u);
    std::vector<std::string> boundary = c.boundary_vars();
    boundary.push_back(u);
    std::vector<int> weights = c.weights();
    weights.push_back(0);
    Chart ext(vars, boundary, weights);
    const std::size_t ui = ext.index(u);

    Substitution s(ext, c);
    for (std::size_t i = 0; i < c.dim(); ++i) {
        int w = c.weight(i);
        if (c.is_boundary(i)) {
            UnitMonomial um;
            um.unit = ext.constant(1);
            um.exponents[i] = 1;
            if (w != 0) um.exponents[ui] = w;
            s.set_boundary_image(i, std::move(um));
        } else {
            RationalFunction im = ext.coordinate(i);
            if (w != 0) im = im * ext.coordinate(ui).pow(w);
            s.set_image(i, im);
        }
    }

    LogForm scaled = pullback(a, s);
    // embed the original form into the extended chart
    LogForm base(ext, a.degree(), a.value_weight());
    for (const auto& [cov, f] : a.terms()) base.add_term(cov, f.embed(ext.vars()));
    if (base.is_zero()) return scaled.is_zero() ? std::optional<int>(0) : std::nullopt;

    const auto& [cov0, f0] = *base.terms().begin();
    auto it = scaled.terms().find(cov0);
    if (it == scaled.terms().end()) return std::nullopt;
    RationalFunction ratio = it->second / f0;
    // the ratio must be exactly u^k
    RationalFunction uu = ext.coordinate(ui);
    if (ratio.is_zero()) return std::nullopt;
    int k = 0;
    if (!ratio.is_constant()) {
        k = ratio.num().degree_in(ui) - ratio.den().degree_in(ui);
    } else if (ratio.constant_value() != 1) {
        return std::nullopt;
    }
    if (!(ratio == uu.pow(k))) return std::nullopt;
    LogForm expected = base * uu.pow(k);
    return scaled == expected ? std::optional<int>(k) : std::nullopt;
}

} // namespace logcontact

#endif
