#pragma once

#include <vector>

#include "fuchsian/hypergeometric.hpp"
#include "fuchsian/moebius.hpp"

namespace fuchsian::whittaker {

/// Parameters of the hypergeometric equation reached from y^2 = z^(2g+1) + 1:
/// alpha = (g-1)a, beta = g a, gamma = 2g a with a = 1/(2g+1).
struct HdeParams {
    int g = 0;
    double a = 0;
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
};

HdeParams hde_params(int g);

/// Map t1 -> t1' for the loop around x = 1, in closed trigonometric form:
/// [2cos(a pi) e^{-(g+1)a pi i}, -i (cos a pi + cos 2a pi)/sin a pi;
///  2i sin a pi,                  2cos(a pi) e^{(g+1)a pi i}].
MoebiusMap connection_map(int g);

/// The same map assembled from the Gamma-ratio connection coefficients of the
/// two solutions at x = 0 onto the two solutions at infinity, eliminating
/// R/S between the upper and lower continuations, then rescaling
/// t1 = G(2ga)G(-a) / (G(ga)G((g-1)a)) t.
MoebiusMap connection_map_from_gammas(int g);

/// t1 -> e^{2 pi i a} t1, the loop around x = 0.
MoebiusMap monodromy_zero(int g);

/// Closed-form generator S for index k in 0..2g, kept both raw (det != 1) and
/// normalized to det 1.
struct WhittakerGenerator {
    int k = 0;
    MoebiusMap raw = MoebiusMap::identity();
    MoebiusMap normalized = MoebiusMap::identity();
    MapClass map_class = MapClass::Elliptic;
};

WhittakerGenerator whittaker_generator(int g, int k);

/// S_j S_1 for j = 2..2g+1 (S_j has k = j - 1), normalized.
struct SubgroupElement {
    int j = 0;
    MoebiusMap map = MoebiusMap::identity();
    MapClass map_class = MapClass::Hyperbolic;
};

std::vector<SubgroupElement> whittaker_subgroup(int g);

// Residuals of the trigonometric identities used to reach connection_map.

/// |(sin ga pi e^{-2a pi i} - sin (g-1)a pi) / sin a pi - 2cos a pi e^{-(g+1)a pi i}|
double identity_a_residual(int g);
/// |(sin ga pi e^{2a pi i} - sin (g-1)a pi) / sin a pi - 2cos a pi e^{(g+1)a pi i}|
double identity_b_residual(int g);
/// |sin (g-1)a pi sin ga pi - (cos a pi + cos 2a pi) / 2|
double sine_product_residual(int g);

} // namespace fuchsian::whittaker
