// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "gfpkit/poly.hpp"

namespace gfpkit {

/// Element u + v*s of the extension ring Q(x)[s]/(s^2 - delta), where delta
/// is a fixed polynomial carried by the element. Elements with different
/// moduli must never be combined; doing so throws DeltaMismatch rather than
/// silently mixing rings.
class QuadElem {
public:
    QuadElem(Poly u, Poly v, Poly delta)
        : u_(std::move(u)), v_(std::move(v)), delta_(std::move(delta)) {}

    static QuadElem scalar(Poly p, Poly delta) { return {std::move(p), Poly(), std::move(delta)}; }

    const Poly& u() const { return u_; }
    const Poly& v() const { return v_; }
    const Poly& delta() const { return delta_; }

    bool is_poly() const { return v_.is_zero(); }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

    QuadElem operator-() const { return {-u_, -v_, delta_}; }

    friend QuadElem operator+(const QuadElem& a, const QuadElem& b) {
        a.require_same_ring(b);
        return {a.u_ + b.u_, a.v_ + b.v_, a.delta_};
    }
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b) {
        a.require_same_ring(b);
        return {a.u_ - b.u_, a.v_ - b.v_, a.delta_};
    }
    // (u1 + v1 s)(u2 + v2 s) = (u1 u2 + v1 v2 delta) + (u1 v2 + u2 v1) s
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b) {
        a.require_same_ring(b);
        return {a.u_ * b.u_ + a.v_ * b.v_ * a.delta_, a.u_ * b.v_ + b.u_ * a.v_, a.delta_};
    }

    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        return a.delta_ == b.delta_ && a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }

    /// Renders "u + (v)*s", or just "u" when the radical part vanishes.
    std::string str() const {
        if (v_.is_zero()) return u_.str();
        return u_.str() + " + (" + v_.str() + ")*s";
    }

private:
    Poly u_, v_, delta_;

    void require_same_ring(const QuadElem& other) const {
        if (delta_ != other.delta_)
            throw DeltaMismatch("cannot combine elements with moduli " + delta_.str() + " and " +
                                other.delta_.str());
    }
};

/// Repeated-squaring power; pow(e, 0) is the ring unit.
QuadElem pow(const QuadElem& base, std::uint64_t exponent);

/// Ring conjugation s -> -s. An involution and a ring homomorphism.
inline QuadElem conj(const QuadElem& e) { return {e.u(), -e.v(), e.delta()}; }

}  // namespace gfpkit
