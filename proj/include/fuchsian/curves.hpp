#pragma once

#include <vector>

#include "fuchsian/moebius.hpp"

namespace fuchsian::curves {

enum class Sign : int { Minus = -1, Plus = +1 };

/// y^2 = z^(2g+1) + sign.
class HyperellipticCurve {
public:
    /// Throws InvalidArgument for genus < 1.
    HyperellipticCurve(int genus, Sign sign);

    int genus() const { return genus_; }
    Sign sign() const { return sign_; }
    int degree() const { return 2 * genus_ + 1; }

    /// f(z) = z^n + sign
    Complex f(Complex z) const;

private:
    int genus_;
    Sign sign_;
};

/// floor((n - 1) / 2); throws InvalidArgument for n < 3.
int genus_from_degree(int n);

/// The n roots of z^n = -sign, built from exact angles, ordered
/// counterclockwise: c_j = exp(i (2j + delta) pi / n), j = 1..n, delta = 0 for sign -1 and
/// 1 for sign +1. For y^2 = z^5 - 1 this gives c_5 = 1.
std::vector<ComplexPoint> roots(const HyperellipticCurve& curve);

/// (3/16) [ (f'/f)^2 - ((2g+2)/(2g+1)) f''/f ]. Throws PoleError at a root.
Complex fde_coefficient(const HyperellipticCurve& curve, Complex z);

} // namespace fuchsian::curves
