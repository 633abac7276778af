#ifndef LOGCONTACT_CHOW_HPP
#define LOGCONTACT_CHOW_HPP

#include <memory>
#include <string>
#include <vector>

#include "logcontact/rational.hpp"
#include "logcontact/splitting_type.hpp"

namespace logcontact {

class ChowClass;

/// Truncated graded intersection ring. Three kinds are supported:
///  - projective space P^n:        Z[h]/(h^{n+1}),     integral = coeff of h^n
///  - the quadric threefold Q^3:   spanned by 1,h,h^2,h^3 restricted from
///                                 P^4, integral = 2 * coeff of h^3
///  - a projective bundle P(E):    generated over the base by xi with
///                                 xi^e + c1 xi^{e-1} + ... + c_e = 0,
///                                 normalized so the tautological line
///                                 bundle pushes forward to E.
class ChowRing {
public:
    enum class Kind { ProjectiveSpace, QuadricThreefold, ProjBundle };

    static std::shared_ptr<const ChowRing> projective_space(int n);
    static std::shared_ptr<const ChowRing> quadric_threefold();
    static std::shared_ptr<const ChowRing> proj_bundle(std::shared_ptr<const ChowRing> base,
                                                       int e, std::vector<ChowClass> chern);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }

    const std::shared_ptr<const ChowRing>& base() const { return base_; }
    int bundle_rank() const { return e_; }
    const std::vector<ChowClass>& bundle_chern() const { return cE_; }

    bool same_as(const ChowRing& other) const;

private:
    ChowRing() = default;

    Kind kind_ = Kind::ProjectiveSpace;
    int dim_ = 0;
    std::shared_ptr<const ChowRing> base_;   // ProjBundle only
    int e_ = 0;                              // ProjBundle only: rank of E
    std::vector<ChowClass> cE_;              // ProjBundle only: c_1..c_e of E
};

/// Cycle class with integer coefficients, graded by codimension and
/// truncated beyond the ring dimension. For a projective bundle the class
/// is a polynomial in xi of degree < e with base-class coefficients.
class ChowClass {
public:
    ChowClass() = default;

    explicit ChowClass(std::shared_ptr<const ChowRing> ring) : ring_(std::move(ring)) {
        if (ring_->kind() == ChowRing::Kind::ProjBundle) {
            xi_.assign(ring_->bundle_rank(), ChowClass(ring_->base()));
        } else {
            h_.assign(ring_->dim() + 1, Int(0));
        }
    }

    static ChowClass unit(std::shared_ptr<const ChowRing> ring) {
        return constant(std::move(ring), 1);
    }

    static ChowClass constant(std::shared_ptr<const ChowRing> ring, const Int& c) {
        ChowClass r(std::move(ring));
        if (r.ring_->kind() == ChowRing::Kind::ProjBundle)
            r.xi_[0] = constant(r.ring_->base(), c);
        else
            r.h_[0] = c;
        return r;
    }

    /// The hyperplane class h (P^n and Q^3 only).
    static ChowClass hyperplane(std::shared_ptr<const ChowRing> ring) {
        ChowClass r(std::move(ring));
        if (r.ring_->kind() == ChowRing::Kind::ProjBundle)
            throw ValueError("hyperplane class: ring is a projective bundle");
        if (r.ring_->dim() >= 1) r.h_[1] = 1;
        return r;
    }

    /// The relative hyperplane class xi of a projective bundle.
    static ChowClass xi(std::shared_ptr<const ChowRing> ring) {
        ChowClass r(std::move(ring));
        if (r.ring_->kind() != ChowRing::Kind::ProjBundle)
            throw ValueError("xi: ring is not a projective bundle");
        if (r.ring_->bundle_rank() == 1)
            r.xi_[0] = r.ring_->bundle_chern()[0] * Int(-1);   // xi + c1(E) = 0
        else
            r.xi_[1] = unit(r.ring_->base());
        return r;
    }

    /// Pullback of a base class to the bundle.
    static ChowClass from_base(std::shared_ptr<const ChowRing> ring, const ChowClass& b) {
        ChowClass r(std::move(ring));
        if (r.ring_->kind() != ChowRing::Kind::ProjBundle)
            throw ValueError("from_base: ring is not a projective bundle");
        if (!b.ring().same_as(*r.ring_->base())) throw ValueError("class not on the base ring");
        r.xi_[0] = b;
        return r;
    }

    const ChowRing& ring() const { return *ring_; }
    std::shared_ptr<const ChowRing> ring_ptr() const { return ring_; }

    bool is_zero() const {
        if (ring_->kind() == ChowRing::Kind::ProjBundle) {
            for (const auto& c : xi_)
                if (!c.is_zero()) return false;
            return true;
        }
        for (const auto& c : h_)
            if (c != 0) return false;
        return true;
    }

    /// Coefficient of h^k (P^n / Q^3 only).
    const Int& h_coeff(int k) const {
        if (ring_->kind() == ChowRing::Kind::ProjBundle)
            throw ValueError("h_coeff: ring is a projective bundle");
        static const Int zero = 0;
        if (k < 0 || k > ring_->dim()) return zero;
        return h_[k];
    }

    /// Coefficient of xi^k as a base class (projective bundle only).
    const ChowClass& xi_coeff(int k) const {
        if (ring_->kind() != ChowRing::Kind::ProjBundle)
            throw ValueError("xi_coeff: ring is not a projective bundle");
        if (k < 0 || k >= ring_->bundle_rank()) throw ValueError("xi power out of range");
        return xi_[k];
    }

    void set_h_coeff(int k, const Int& c) {
        if (ring_->kind() == ChowRing::Kind::ProjBundle)
            throw ValueError("set_h_coeff: ring is a projective bundle");
        if (k < 0) throw ValueError("negative degree");
        if (k <= ring_->dim()) h_[k] = c;   // beyond the dimension truncates to zero
    }

    /// Graded part of total codimension k.
    ChowClass graded_part(int k) const {
        ChowClass r(ring_);
        if (ring_->kind() == ChowRing::Kind::ProjBundle) {
            for (int i = 0; i < ring_->bundle_rank(); ++i)
                if (k - i >= 0) r.xi_[i] = xi_[i].graded_part(k - i);
        } else if (k >= 0 && k <= ring_->dim()) {
            r.h_[k] = h_[k];
        }
        return r;
    }

    bool homogeneous_of_degree(int k) const {
        ChowClass diff = *this - graded_part(k);
        return diff.is_zero();
    }

    friend ChowClass operator+(const ChowClass& a, const ChowClass& b) {
        a.require_same_ring(b);
        ChowClass r = a;
        if (a.ring_->kind() == ChowRing::Kind::ProjBundle) {
            for (std::size_t i = 0; i < r.xi_.size(); ++i) r.xi_[i] = r.xi_[i] + b.xi_[i];
        } else {
            for (std::size_t i = 0; i < r.h_.size(); ++i) r.h_[i] += b.h_[i];
        }
        return r;
    }

    friend ChowClass operator-(const ChowClass& a, const ChowClass& b) {
        return a + b * Int(-1);
    }

    friend ChowClass operator*(const ChowClass& a, const Int& c) {
        ChowClass r = a;
        if (a.ring_->kind() == ChowRing::Kind::ProjBundle) {
            for (auto& x : r.xi_) x = x * c;
        } else {
            for (auto& x : r.h_) x *= c;
        }
        return r;
    }

    friend ChowClass operator*(const ChowClass& a, const ChowClass& b) {
        a.require_same_ring(b);
        if (a.ring_->kind() != ChowRing::Kind::ProjBundle) {
            ChowClass r(a.ring_);
            for (int i = 0; i <= a.ring_->dim(); ++i)
                for (int j = 0; i + j <= a.ring_->dim(); ++j) r.h_[i + j] += a.h_[i] * b.h_[j];
            return r;
        }
        const int e = a.ring_->bundle_rank();
        // multiply as polynomials in xi, then reduce by the Grothendieck
        // relation xi^e = -(c1 xi^{e-1} + ... + c_e)
        std::vector<ChowClass> prod(2 * e - 1, ChowClass(a.ring_->base()));
        for (int i = 0; i < e; ++i)
            for (int j = 0; j < e; ++j) prod[i + j] = prod[i + j] + a.xi_[i] * b.xi_[j];
        for (int k = 2 * e - 2; k >= e; --k) {
            ChowClass lead = prod[k];
            if (lead.is_zero()) continue;
            prod[k] = ChowClass(a.ring_->base());
            for (int i = 1; i <= e; ++i)
                prod[k - i] = prod[k - i] - lead * a.ring_->bundle_chern()[i - 1];
        }
        ChowClass r(a.ring_);
        for (int i = 0; i < e; ++i) r.xi_[i] = prod[i];
        return r;
    }

    ChowClass pow(int n) const {
        if (n < 0) throw ValueError("negative class power");
        ChowClass r = unit(ring_);
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    bool operator==(const ChowClass& b) const {
        if (!ring_->same_as(*b.ring_)) return false;
        return (*this - b).is_zero();
    }

    std::string str() const;

private:
    void require_same_ring(const ChowClass& b) const {
        if (!ring_ || !b.ring_ || !ring_->same_as(*b.ring_))
            throw ValueError("classes live in different rings");
    }

    std::shared_ptr<const ChowRing> ring_;
    std::vector<Int> h_;          // P^n / Q^3: coefficients of h^k
    std::vector<ChowClass> xi_;   // ProjBundle: base classes by xi power
};

inline std::shared_ptr<const ChowRing> ChowRing::projective_space(int n) {
    if (n < 0) throw ValueError("negative projective-space dimension");
    auto r = std::shared_ptr<ChowRing>(new ChowRing());
    r->kind_ = Kind::ProjectiveSpace;
    r->dim_ = n;
    return r;
}

inline std::shared_ptr<const ChowRing> ChowRing::quadric_threefold() {
    auto r = std::shared_ptr<ChowRing>(new ChowRing());
    r->kind_ = Kind::QuadricThreefold;
    r->dim_ = 3;
    return r;
}

inline std::shared_ptr<const ChowRing> ChowRing::proj_bundle(
    std::shared_ptr<const ChowRing> base, int e, std::vector<ChowClass> chern) {
    if (e < 1) throw ValueError("projective bundle needs rank >= 1");
    if (static_cast<int>(chern.size()) != e)
        throw ValueError("projective bundle needs c_1..c_e of E");
    for (std::size_t i = 0; i < chern.size(); ++i) {
        if (!chern[i].ring().same_as(*base)) throw ValueError("Chern classes not on the base");
        if (!chern[i].homogeneous_of_degree(static_cast<int>(i) + 1))
            throw ValueError("c_i of E must be homogeneous of degree i");
    }
    auto r = std::shared_ptr<ChowRing>(new ChowRing());
    r->kind_ = Kind::ProjBundle;
    r->base_ = std::move(base);
    r->e_ = e;
    r->dim_ = r->base_->dim() + e - 1;
    r->cE_ = std::move(chern);
    return r;
}

inline bool ChowRing::same_as(const ChowRing& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_ || dim_ != other.dim_) return false;
    if (kind_ != Kind::ProjBundle) return true;
    if (e_ != other.e_ || !base_->same_as(*other.base_)) return false;
    for (int i = 0; i < e_; ++i)
        if (!(cE_[i] == other.cE_[i])) return false;
    return true;
}

inline std::string ChowClass::str() const {
    if (ring_->kind() == ChowRing::Kind::ProjBundle) {
        std::string s;
        for (int i = 0; i < ring_->bundle_rank(); ++i) {
            if (xi_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + xi_[i].str() + ")";
            if (i == 1) s += "*xi";
            if (i > 1) s += "*xi^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }
    std::string s;
    for (int k = 0; k <= ring_->dim(); ++k) {
        if (h_[k] == 0) continue;
        Int c = h_[k];
        if (!s.empty()) {
            s += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        } else if (c < 0) {
            s += "-";
            c = -c;
        }
        if (k == 0 || c != 1) s += c.str();
        if (k > 0 && c != 1) s += "*";
        if (k == 1) s += "h";
        if (k > 1) s += "h^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

/// Integral of the top graded piece. Lower-degree parts are ignored.
/// P^n: coefficient of h^n; Q^3: twice the coefficient of h^3 (the quadric
/// has degree 2); projective bundle: push forward to the base and integrate
/// there (in canonical form only xi^{e-1} survives the pushforward).
inline Int integrate(const ChowClass& c) {
    const ChowRing& r = c.ring();
    switch (r.kind()) {
        case ChowRing::Kind::ProjectiveSpace:
            return c.h_coeff(r.dim());
        case ChowRing::Kind::QuadricThreefold:
            return 2 * c.h_coeff(3);
        case ChowRing::Kind::ProjBundle: {
            const ChowClass& top = c.xi_coeff(r.bundle_rank() - 1);
            return integrate(top.graded_part(r.base()->dim()));
        }
    }
    throw InvariantError("unknown ring kind");
}

/// Vector bundle tracked through its rank and total Chern class.
/// Construction enforces c_i = 0 for i > rank, which is what turns the
/// rank-2 obstruction computations into hard errors.
class BundleClass {
public:
    BundleClass(int rank, ChowClass total_chern)
        : rank_(rank), c_(std::move(total_chern)) {
        if (rank_ < 0) throw ValueError("negative bundle rank");
        ChowClass c0 = c_.graded_part(0);
        if (!(c0 == ChowClass::unit(c_.ring_ptr())))
            throw ValueError("total Chern class must start with 1");
        for (int i = rank_ + 1; i <= c_.ring().dim(); ++i)
            if (!c_.graded_part(i).is_zero())
                throw InvariantError("c_" + std::to_string(i) + " nonzero on a rank-" +
                                     std::to_string(rank_) + " bundle");
    }

    static BundleClass trivial(std::shared_ptr<const ChowRing> ring, int rank) {
        return BundleClass(rank, ChowClass::unit(std::move(ring)));
    }

    /// Line bundle O(d) on P^n or Q^3.
    static BundleClass line(std::shared_ptr<const ChowRing> ring, int d) {
        ChowClass c = ChowClass::unit(ring);
        c = c + ChowClass::hyperplane(ring) * Int(d);
        return BundleClass(1, std::move(c));
    }

    int rank() const { return rank_; }
    const ChowClass& total_chern() const { return c_; }
    ChowClass chern(int i) const { return c_.graded_part(i); }

    bool operator==(const BundleClass& b) const { return rank_ == b.rank_ && c_ == b.c_; }

private:
    int rank_;
    ChowClass c_;
};

/// Truncated inverse of a total Chern class (degree-0 part must be 1).
inline ChowClass chern_series_inverse(const ChowClass& c) {
    auto ring = c.ring_ptr();
    if (!(c.graded_part(0) == ChowClass::unit(ring)))
        throw ValueError("series inverse needs degree-0 part 1");
    ChowClass inv = ChowClass::unit(ring);
    for (int k = 1; k <= c.ring().dim(); ++k) {
        // coefficient of degree k in c * inv must vanish
        ChowClass acc(ring);
        for (int i = 1; i <= k; ++i) acc = acc + (c.graded_part(i) * inv.graded_part(k - i)).graded_part(k);
        inv = inv - acc;
    }
    return inv;
}

/// Whitney quotient: given 0 -> S -> E -> Q -> 0 and two of the classes,
/// recover the third by truncated power-series division.
inline BundleClass whitney_sub(const BundleClass& total, const BundleClass& quotient) {
    if (quotient.rank() > total.rank()) throw ValueError("quotient rank exceeds total rank");
    ChowClass c = total.total_chern() * chern_series_inverse(quotient.total_chern());
    return BundleClass(total.rank() - quotient.rank(), std::move(c));
}

inline BundleClass whitney_quotient(const BundleClass& total, const BundleClass& sub) {
    if (sub.rank() > total.rank()) throw ValueError("sub rank exceeds total rank");
    ChowClass c = total.total_chern() * chern_series_inverse(sub.total_chern());
    return BundleClass(total.rank() - sub.rank(), std::move(c));
}

inline BundleClass whitney_sum(const BundleClass& a, const BundleClass& b) {
    return BundleClass(a.rank() + b.rank(), a.total_chern() * b.total_chern());
}

/// Twist by a line-bundle class t of degree 1 via the splitting principle:
///   c_k(E (x) L) = sum_i binom(r-i, k-i) c_i(E) t^{k-i}.
inline BundleClass twist(const BundleClass& e, const ChowClass& t) {
    if (!t.homogeneous_of_degree(1)) throw ValueError("twist class must be homogeneous of degree 1");
    auto ring = e.total_chern().ring_ptr();
    if (!t.ring().same_as(*ring)) throw ValueError("twist class in a different ring");
    auto binom = [](long n, long k) {
        if (k < 0 || k > n) return Int(0);
        Int r = 1;
        for (long i = 0; i < k; ++i) {
            r *= Int(n - i);
            r /= Int(i + 1);
        }
        return r;
    };
    ChowClass c = ChowClass::unit(ring);
    const int r = e.rank();
    for (int k = 1; k <= std::min(r, e.total_chern().ring().dim()); ++k) {
        ChowClass ck(ring);
        for (int i = 0; i <= k; ++i) {
            Int b = binom(r - i, k - i);
            if (b == 0) continue;
            ck = ck + (e.chern(i) * t.pow(k - i)) * b;
        }
        c = c + ck.graded_part(k);
    }
    return BundleClass(r, std::move(c));
}

/// Tangent bundle: P^n has c = (1+h)^{n+1}; the quadric threefold combines
/// the restricted ambient tangent bundle with its degree-2 normal bundle.
inline BundleClass tangent_bundle(std::shared_ptr<const ChowRing> ring) {
    if (ring->kind() == ChowRing::Kind::ProjectiveSpace) {
        ChowClass oneplus = ChowClass::unit(ring) + ChowClass::hyperplane(ring);
        return BundleClass(ring->dim(), oneplus.pow(ring->dim() + 1));
    }
    if (ring->kind() == ChowRing::Kind::QuadricThreefold) {
        ChowClass h = ChowClass::hyperplane(ring);
        ChowClass ambient = (ChowClass::unit(ring) + h).pow(5);
        ChowClass normal = ChowClass::unit(ring) + h * Int(2);
        return BundleClass(3, ambient * chern_series_inverse(normal));
    }
    throw ValueError("tangent bundle: unsupported ring kind");
}

/// Residue convention for the boundary quotient in the log tangent sequence.
enum class NormalConvention {
    OD,      // quotient O_D, with c(O_D) = (1 - d h)^{-1}
    OD_of_D  // quotient O_D(D), with c = 1 + d h
};

inline std::string to_string(NormalConvention c) {
    return c == NormalConvention::OD ? "OD" : "OD(D)";
}

/// Chern class of T(-log D) for a divisor with smooth components of the
/// given degrees: c(T) divided by the chosen normal-direction classes.
inline BundleClass log_tangent_chern(std::shared_ptr<const ChowRing> ring,
                                     const std::vector<int>& divisor_degrees,
                                     NormalConvention convention) {
    BundleClass t = tangent_bundle(ring);
    ChowClass c = t.total_chern();
    ChowClass h = ChowClass::hyperplane(ring);
    for (int d : divisor_degrees) {
        if (d < 1) throw ValueError("divisor degrees must be positive");
        if (convention == NormalConvention::OD_of_D) {
            ChowClass nd = ChowClass::unit(ring) + h * Int(d);
            c = c * chern_series_inverse(nd);
        } else {
            // dividing by (1 - d h)^{-1} multiplies by (1 - d h)
            ChowClass nd = ChowClass::unit(ring) - h * Int(d);
            c = c * nd;
        }
    }
    return BundleClass(t.rank(), std::move(c));
}

/// Chern class of a direct sum of line bundles on P^n / Q^3 given by a
/// splitting type: prod (1 + a_i h).
inline BundleClass chern_of_splitting(std::shared_ptr<const ChowRing> ring,
                                      const SplittingType& s) {
    ChowClass c = ChowClass::unit(ring);
    ChowClass h = ChowClass::hyperplane(ring);
    for (int a : s.entries()) c = c * (ChowClass::unit(ring) + h * Int(a));
    return BundleClass(static_cast<int>(s.rank()), std::move(c));
}

/// Full Appendix-style pipeline on P^3 with a smooth quadric boundary:
/// integral of c3((T(-log D)) (x) O(-1)).
inline Int appendix_a_p3() {
    auto p3 = ChowRing::projective_space(3);
    BundleClass tlog = log_tangent_chern(p3, {2}, NormalConvention::OD_of_D);
    ChowClass minus_h = ChowClass::hyperplane(p3) * Int(-1);
    BundleClass twisted = twist(tlog, minus_h);
    return integrate(twisted.chern(3));
}

struct Q3Values {
    Int od;        // with quotient O_D
    Int od_of_d;   // with quotient O_D(D)
};

/// Same pipeline on the quadric threefold with a hyperplane-section
/// boundary, under both residue conventions. The proof only needs a
/// nonzero value; both are reported.
inline Q3Values appendix_a_q3() {
    auto q3 = ChowRing::quadric_threefold();
    ChowClass minus_h = ChowClass::hyperplane(q3) * Int(-1);
    Q3Values v;
    v.od = integrate(twist(log_tangent_chern(q3, {1}, NormalConvention::OD), minus_h).chern(3));
    v.od_of_d =
        integrate(twist(log_tangent_chern(q3, {1}, NormalConvention::OD_of_D), minus_h).chern(3));
    if (v.od == 0 && v.od_of_d == 0)
        throw InvariantError("quadric threefold obstruction vanished under both conventions");
    return v;
}

/// Divisor class of the section P(G_i) in P(E): xi - pi^* c1(M_i).
inline ChowClass projbundle_divisor_class(std::shared_ptr<const ChowRing> ring,
                                          const ChowClass& c1_mi) {
    if (ring->kind() != ChowRing::Kind::ProjBundle)
        throw ValueError("divisor class needs a projective-bundle ring");
    if (!c1_mi.homogeneous_of_degree(1)) throw ValueError("c1(M_i) must have degree 1");
    return ChowClass::xi(ring) - ChowClass::from_base(ring, c1_mi);
}

} // namespace logcontact

#endif
