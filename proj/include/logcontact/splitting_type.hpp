#ifndef LOGCONTACT_SPLITTING_TYPE_HPP
#define LOGCONTACT_SPLITTING_TYPE_HPP

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "logcontact/rational.hpp"

namespace logcontact {

/// Splitting type of a vector bundle on the projective line: the multiset
/// of twists a_i in the decomposition O(a_1) + ... + O(a_n), stored sorted
/// descending.
class SplittingType {
public:
    explicit SplittingType(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw ValueError("splitting type needs rank >= 1");
        std::sort(entries_.begin(), entries_.end(), std::greater<int>());
    }

    static SplittingType parse(const std::string& text) {
        std::vector<int> es;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw ParseError("bad splitting-type entry '" + tok + "'");
            es.push_back(v);
        }
        if (es.empty()) throw ParseError("empty splitting type");
        return SplittingType(std::move(es));
    }

    const std::vector<int>& entries() const { return entries_; }
    std::size_t rank() const { return entries_.size(); }

    long degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0L); }

    SplittingType dual() const {
        std::vector<int> es;
        for (int a : entries_) es.push_back(-a);
        return SplittingType(std::move(es));
    }

    SplittingType twist(int k) const {
        std::vector<int> es;
        for (int a : entries_) es.push_back(a + k);
        return SplittingType(std::move(es));
    }

    SplittingType direct_sum(const SplittingType& other) const {
        std::vector<int> es = entries_;
        es.insert(es.end(), other.entries_.begin(), other.entries_.end());
        return SplittingType(std::move(es));
    }

    bool operator==(const SplittingType&) const = default;

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries_[i]);
        }
        return s;
    }

private:
    std::vector<int> entries_;
};

/// Number of strictly positive entries.
inline int rank_plus(const SplittingType& s) {
    int n = 0;
    for (int a : s.entries())
        if (a > 0) ++n;
    return n;
}

/// dim Ext^1(quotient, sub) = sum max(0, a_i - b_j - 1) over the twists of
/// the two bundles; the split/nonsplit oracle.
inline long ext1_dim(const SplittingType& quotient, const SplittingType& sub) {
    long d = 0;
    for (int a : quotient.entries())
        for (int b : sub.entries()) d += std::max(0, a - b - 1);
    return d;
}

/// Consistency predicate for a sequence 0 -> O -> E1 -> E2 -> 0.
/// Split: E1 must be E2 plus a trivial summand. Nonsplit: rank and degree
/// bookkeeping, the positive rank drops by one, and Ext^1(E2, O) != 0 so a
/// nonsplit extension exists at all.
inline bool extension_rank_plus_rule(const SplittingType& e1, const SplittingType& e2,
                                     bool split) {
    if (e1.rank() != e2.rank() + 1 || e1.degree() != e2.degree()) return false;
    if (split) return e1 == e2.direct_sum(SplittingType({0}));
    if (rank_plus(e2) != rank_plus(e1) - 1) return false;
    return ext1_dim(e2, SplittingType({0})) > 0;
}

/// Consistency predicate for a sequence 0 -> E2 -> E1 -> O^m -> 0: the
/// positive rank of the duals can only drop, with equality exactly in the
/// split case.
inline bool quotient_by_trivials_rule(const SplittingType& e1, const SplittingType& e2, int m,
                                      bool split) {
    if (m < 1) return false;
    if (e2.rank() + static_cast<std::size_t>(m) != e1.rank()) return false;
    if (e1.degree() != e2.degree()) return false;
    int d2 = rank_plus(e2.dual());
    int d1 = rank_plus(e1.dual());
    return split ? d2 == d1 : d2 < d1;
}

/// Shape test B = L^{-1} (x) B^*: the multiset is preserved by b -> -b-d.
inline bool selfdual_shape(const SplittingType& b, int d) {
    std::vector<int> mapped;
    for (int a : b.entries()) mapped.push_back(-a - d);
    std::sort(mapped.begin(), mapped.end(), std::greater<int>());
    return mapped == b.entries();
}

/// Positive-rank bound for restrictions of log tangent sheaves to rational
/// curves: rk+ <= r+1 in general, <= r when the curve misses the boundary.
inline bool rank_plus_bound_check(const SplittingType& s, int r, bool boundary_free) {
    return rank_plus(s) <= (boundary_free ? r : r + 1);
}

} // namespace logcontact

#endif
