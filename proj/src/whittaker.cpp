#include "fuchsian/whittaker.hpp"

#include <cmath>
#include <numbers>

#include "fuchsian/errors.hpp"

namespace fuchsian::whittaker {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

void require_genus(int g)
{
    if (g < 2)
        throw InvalidArgument("Whittaker construction needs genus >= 2");
}

double unit(int g) { return 1.0 / (2.0 * g + 1.0); }

// e^{k a pi i}
Complex phase(double k, double a) { return std::exp(kI * (k * a * kPi)); }

} // namespace

HdeParams hde_params(int g)
{
    require_genus(g);
    const double a = unit(g);
    return {g, a, (g - 1) * a, g * a, 2.0 * g * a};
}

MoebiusMap connection_map(int g)
{
    require_genus(g);
    const double a = unit(g);
    const double c1 = std::cos(a * kPi);
    const double c2 = std::cos(2.0 * a * kPi);
    const double s1 = std::sin(a * kPi);
    return {2.0 * c1 * phase(-(g + 1.0), a), -kI * (c1 + c2) / s1, 2.0 * kI * s1,
            2.0 * c1 * phase(g + 1.0, a)};
}

MoebiusMap connection_map_from_gammas(int g)
{
    require_genus(g);
    const double a = unit(g);
    auto G = [](double x) { return gamma_fn(x); };

    // P = F((g-1)a, ga; 2ga; x) and Q = x^a F(ga, (g+1)a; 2(g+1)a; x)
    // expanded on R = w_{1,inf}, S = w_{2,inf}.
    const double p_r = G(2 * g * a) * G(a) / (G((g + 1) * a) * G(g * a));
    const double p_s = G(2 * g * a) * G(-a) / (G((g - 1) * a) * G(g * a));
    const double q_r = G(2 * (g + 1) * a) * G(a) / (G((g + 2) * a) * G((g + 1) * a));
    const double q_s = G(2 * (g + 1) * a) * G(-a) / (G(g * a) * G((g + 1) * a));

    // (-x)^{-k} = x^{-k} e^{+k pi i} above the cut (t), e^{-k pi i} below (t').
    auto quotient = [&](double sgn) {
        return MoebiusMap(q_r * phase(sgn * g, a), q_s * phase(sgn * (g + 1), a),
                          p_r * phase(sgn * (g - 1), a), p_s * phase(sgn * g, a));
    };
    const MoebiusMap upper = quotient(+1.0); // t  as a map of R/S
    const MoebiusMap lower = quotient(-1.0); // t' as a map of R/S
    const MoebiusMap t_to_tp = compose(lower, inverse(upper));

    const MoebiusMap scale(p_s, 0.0, 0.0, 1.0); // t1 = p_s t
    return compose(compose(scale, t_to_tp), inverse(scale));
}

MoebiusMap monodromy_zero(int g)
{
    require_genus(g);
    return {phase(2.0, unit(g)), 0.0, 0.0, 1.0};
}

WhittakerGenerator whittaker_generator(int g, int k)
{
    require_genus(g);
    if (k < 0 || k > 2 * g)
        throw InvalidArgument("generator index k must lie in 0..2g");
    const double a = unit(g);
    const double s = 1.0 / std::sqrt(2.0 * std::cos(a * kPi) - 1.0);
    const Complex e = phase(0.5 * (4.0 * k + 1.0), a);

    WhittakerGenerator out;
    out.k = k;
    out.raw = MoebiusMap(s, -e, 1.0 / e, -s);
    out.normalized = normalize(out.raw);
    out.map_class = classify(out.normalized);
    return out;
}

std::vector<SubgroupElement> whittaker_subgroup(int g)
{
    require_genus(g);
    const MoebiusMap s1 = whittaker_generator(g, 0).normalized;
    std::vector<SubgroupElement> out;
    out.reserve(static_cast<std::size_t>(2 * g));
    for (int j = 2; j <= 2 * g + 1; ++j) {
        SubgroupElement e;
        e.j = j;
        e.map = normalize(compose(whittaker_generator(g, j - 1).normalized, s1));
        e.map_class = classify(e.map);
        out.push_back(e);
    }
    return out;
}

double identity_a_residual(int g)
{
    require_genus(g);
    const double a = unit(g);
    const Complex lhs =
        (std::sin(g * a * kPi) * phase(-2.0, a) - std::sin((g - 1) * a * kPi)) / std::sin(a * kPi);
    return std::abs(lhs - 2.0 * std::cos(a * kPi) * phase(-(g + 1.0), a));
}

double identity_b_residual(int g)
{
    require_genus(g);
    const double a = unit(g);
    const Complex lhs =
        (std::sin(g * a * kPi) * phase(2.0, a) - std::sin((g - 1) * a * kPi)) / std::sin(a * kPi);
    return std::abs(lhs - 2.0 * std::cos(a * kPi) * phase(g + 1.0, a));
}

double sine_product_residual(int g)
{
    require_genus(g);
    const double a = unit(g);
    return std::abs(std::sin((g - 1) * a * kPi) * std::sin(g * a * kPi) -
                    0.5 * (std::cos(a * kPi) + std::cos(2.0 * a * kPi)));
}

} // namespace fuchsian::whittaker
