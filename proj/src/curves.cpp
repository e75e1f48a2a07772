#include "fuchsian/curves.hpp"

#include <cmath>
#include <numbers>

#include "fuchsian/errors.hpp"

namespace fuchsian::curves {

namespace {

Complex ipow(Complex z, int k)
{
    Complex r(1.0, 0.0);
    for (int i = 0; i < k; ++i)
        r *= z;
    return r;
}

} // namespace

HyperellipticCurve::HyperellipticCurve(int genus, Sign sign) : genus_(genus), sign_(sign)
{
    if (genus < 1)
        throw InvalidArgument("curve genus must be >= 1");
}

Complex HyperellipticCurve::f(Complex z) const
{
    return ipow(z, degree()) + static_cast<double>(static_cast<int>(sign_));
}

int genus_from_degree(int n)
{
    if (n < 3)
        throw InvalidArgument("degree must be >= 3");
    return (n - 1) / 2;
}

std::vector<ComplexPoint> roots(const HyperellipticCurve& curve)
{
    const int n = curve.degree();
    const int delta = curve.sign() == Sign::Minus ? 0 : 1;
    std::vector<ComplexPoint> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const double theta = (2.0 * j + delta) * std::numbers::pi / n;
        out.emplace_back(std::cos(theta), std::sin(theta));
    }
    return out;
}

Complex fde_coefficient(const HyperellipticCurve& curve, Complex z)
{
    const int n = curve.degree();
    const Complex f = curve.f(z);
    if (std::abs(f) <= 1e-12)
        throw PoleError("FDE coefficient has a pole at a curve root");
    const Complex f1 = static_cast<double>(n) * ipow(z, n - 1);
    const Complex f2 = static_cast<double>(n) * (n - 1) * ipow(z, n - 2);
    const double ratio = (2.0 * curve.genus() + 2.0) / (2.0 * curve.genus() + 1.0);
    const Complex l = f1 / f;
    return (3.0 / 16.0) * (l * l - ratio * f2 / f);
}

} // namespace fuchsian::curves
