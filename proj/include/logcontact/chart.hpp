#ifndef LOGCONTACT_CHART_HPP
#define LOGCONTACT_CHART_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "logcontact/parse.hpp"

namespace logcontact {

/// Affine chart with flagged boundary coordinates. The boundary coordinates
/// cut out the normal crossing divisor on this chart; `weights` carries the
/// multiplicative-group weight of each coordinate (default 0).
class Chart {
public:
    Chart() = default;

    Chart(std::vector<std::string> vars, std::vector<std::string> boundary,
          std::vector<int> weights = {})
        : vars_(std::move(vars)), weights_(std::move(weights)) {
        if (vars_.empty()) throw ValueError("chart needs at least one coordinate");
        std::set<std::string> seen(vars_.begin(), vars_.end());
        if (seen.size() != vars_.size()) throw ValueError("duplicate chart coordinate");
        boundary_.assign(vars_.size(), false);
        for (const auto& b : boundary) boundary_[index(b)] = true;
        if (weights_.empty()) weights_.assign(vars_.size(), 0);
        if (weights_.size() != vars_.size())
            throw ValueError("weight list length does not match coordinates");
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t dim() const { return vars_.size(); }

    bool is_boundary(std::size_t i) const { return boundary_.at(i); }
    int weight(std::size_t i) const { return weights_.at(i); }
    const std::vector<int>& weights() const { return weights_; }

    std::vector<std::string> boundary_vars() const {
        std::vector<std::string> r;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (boundary_[i]) r.push_back(vars_[i]);
        return r;
    }

    std::size_t index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw ValueError("unknown chart coordinate '" + name + "'");
        return static_cast<std::size_t>(it - vars_.begin());
    }

    bool has_var(const std::string& name) const {
        return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    }

    /// Basis covector label: dlog(x) = dx/x for boundary coordinates,
    /// plain dx otherwise.
    std::string covector_label(std::size_t i) const {
        return (boundary_[i] ? "dlog " : "d") + vars_[i];
    }

    /// Inverse of covector_label; rejects labels that do not match the
    /// chart's boundary structure.
    std::size_t covector_index(const std::string& label) const {
        bool is_log = label.rfind("dlog ", 0) == 0;
        std::string name = is_log ? label.substr(5) : label;
        if (!is_log) {
            if (label.size() < 2 || label[0] != 'd')
                throw ValueError("unknown covector label '" + label + "'");
            name = label.substr(1);
        }
        while (!name.empty() && name.front() == ' ') name.erase(name.begin());
        if (!has_var(name)) throw ValueError("unknown covector label '" + label + "'");
        std::size_t i = index(name);
        if (is_log != is_boundary(i))
            throw ValueError("covector label '" + label + "' does not match the boundary flag of '" +
                             name + "'");
        return i;
    }

    RationalFunction parse(const std::string& text) const {
        return parse_rational(text, vars_);
    }

    RationalFunction constant(const Rational& c) const {
        return RationalFunction::constant(vars_, c);
    }

    RationalFunction coordinate(std::size_t i) const {
        return RationalFunction::variable(vars_, i);
    }

    /// A coefficient of a log form may have at worst log poles, which the
    /// dlog basis already carries: its denominator must not vanish along
    /// the boundary.
    bool is_regular(const RationalFunction& f) const {
        if (f.vars() != vars_) return false;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (boundary_[i] && f.den().divisible_by_var(i)) return false;
        return true;
    }

    /// Unit on the chart, checked syntactically: numerator and denominator
    /// are not divisible by any boundary coordinate.
    bool is_unit(const RationalFunction& f) const {
        if (f.is_zero() || f.vars() != vars_) return false;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (boundary_[i] && (f.num().divisible_by_var(i) || f.den().divisible_by_var(i)))
                return false;
        return true;
    }

    friend bool operator==(const Chart& a, const Chart& b) {
        return a.vars_ == b.vars_ && a.boundary_ == b.boundary_ && a.weights_ == b.weights_;
    }

private:
    std::vector<std::string> vars_;
    std::vector<bool> boundary_;
    std::vector<int> weights_;
};

} // namespace logcontact

#endif
