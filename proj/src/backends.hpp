#pragma once

// Two evaluation backends for identity checks. SymbolicBackend works in the
// polynomial ring (d_n taken from a cached symbolic sequence); PointBackend
// works with exact rationals at one (r, x) point, with d_n from the scalar
// recurrence. Identity code is written once against either.

#include "delannoy/bipoly.hpp"
#include "delannoy/eval_point.hpp"
#include "delannoy/sequences.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace delannoy::detail {

/// x -> scale*x + shift.
struct XMap {
    Rational scale{1};
    Rational shift{0};
};

inline const XMap kIdentityX{};
inline const XMap kNegX{-1, 0};

inline XMap x_value(const Rational& v) { return XMap{0, v}; }

class SymbolicBackend {
public:
    using value_type = BiPoly;

    explicit SymbolicBackend(std::shared_ptr<const DSequence> seq,
                             std::optional<Rational> fixed_r = std::nullopt)
        : seq_(std::move(seq)), fixed_r_(std::move(fixed_r)) {}

    BiPoly x() const { return BiPoly::x(); }
    BiPoly r() const { return fixed_r_ ? BiPoly(*fixed_r_) : BiPoly::r(); }

    /// d_n^(r + r_shift)(scale*x + shift).
    BiPoly d_at(unsigned n, const XMap& xm, const Rational& r_shift = 0) const {
        BiPoly p = poly(n);
        if (!r_shift.is_zero()) p = poly_subst_affine_r(p, r_shift);
        if (fixed_r_) p = poly_eval_r(p, *fixed_r_);
        if (xm.scale != 1 || !xm.shift.is_zero()) p = poly_subst_x(p, xm.scale, xm.shift);
        return p;
    }
    BiPoly d(unsigned n) const { return d_at(n, kIdentityX); }

    /// d_n at a fully specified point.
    Rational d_fixed(unsigned n, const EvalPoint& at) const { return poly_eval(poly(n), at); }

    const Rational& fixed_r() const {
        if (!fixed_r_) throw std::logic_error("identity needs a fixed r value");
        return *fixed_r_;
    }

    template <class Pred>
    bool admits_r(Pred&& pred) const {
        return !fixed_r_ || pred(*fixed_r_);
    }

    std::string where() const { return fixed_r_ ? " r=" + fixed_r_->str() : ""; }

private:
    const BiPoly& poly(unsigned n) const {
        if (n >= seq_->polys.size())
            throw std::out_of_range("symbolic sequence too short for n=" + std::to_string(n));
        return seq_->polys[n];
    }

    std::shared_ptr<const DSequence> seq_;
    std::optional<Rational> fixed_r_;
};

class PointBackend {
public:
    using value_type = Rational;

    PointBackend(EvalPoint pt, unsigned n_max) : pt_(std::move(pt)), n_max_(n_max) {}

    Rational x() const { return pt_.x; }
    Rational r() const { return pt_.r; }

    Rational d_at(unsigned n, const XMap& xm, const Rational& r_shift = 0) const {
        return d_fixed(n, EvalPoint{pt_.r + r_shift, xm.scale * pt_.x + xm.shift});
    }
    Rational d(unsigned n) const { return d_at(n, kIdentityX); }

    Rational d_fixed(unsigned n, const EvalPoint& at) const {
        auto key = std::pair{at.r, at.x};
        auto it = memo_.find(key);
        if (it == memo_.end())
            it = memo_.emplace(key, d_eval_sequence(std::max(n, n_max_), at)).first;
        if (n >= it->second.size()) it->second = d_eval_sequence(n, at);
        return it->second[n];
    }

    const Rational& fixed_r() const { return pt_.r; }

    template <class Pred>
    bool admits_r(Pred&& pred) const {
        return pred(pt_.r);
    }

    std::string where() const { return " " + pt_.str(); }

private:
    EvalPoint pt_;
    unsigned n_max_;
    mutable std::map<std::pair<Rational, Rational>, std::vector<Rational>> memo_;
};

} // namespace delannoy::detail
