#include "switchsim/dim4.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace switchsim {

PauliChannel make_depolarizing_d4(double s) {
    if (!(s >= 0.0 && s <= 16.0 / 15.0))
        throw std::domain_error("make_depolarizing_d4: s must lie in [0, 16/15]");
    std::array<double, 16> v;
    v.fill(s / 16.0);
    v[0] = 1.0 - 15.0 * s / 16.0;
    return PauliChannel(4, v);
}

PauliChannel make_delta(double p, double q) {
    if (!(p >= 0.0 && p <= 4.0 / 3.0 && q >= 0.0 && q <= 4.0 / 3.0))
        throw std::domain_error("make_delta: p and q must lie in [0, 4/3]");
    const double ap = 1.0 - 3.0 * p / 4.0;
    const double aq = 1.0 - 3.0 * q / 4.0;
    std::array<double, 16> v;
    for (int i = 0; i < 16; ++i) {
        const double first = (i / 4 == 0) ? ap : p / 4.0;
        const double second = (i % 4 == 0) ? aq : q / 4.0;
        v[static_cast<std::size_t>(i)] = first * second;
    }
    return PauliChannel(4, v);
}

PauliChannel make_W(double p, double q) {
    if (!(p >= 0.0 && q >= 0.0 && p + q <= 1.0))
        throw std::domain_error("make_W: need p >= 0, q >= 0, p + q <= 1");
    const double r = 1.0 - p - q;
    // First qubit: Y with prob p, Z with prob q; second qubit with the
    // probabilities reversed.
    const std::array<double, 16> v{
        r * r, 0.0,   r * q, r * p,
        0.0,   0.0,   0.0,   0.0,
        p * r, 0.0,   p * q, p * p,
        q * r, 0.0,   q * q, p * q,
    };
    return PauliChannel(4, v);
}

Ensemble make_ensemble(Omega tag) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::array<cplx, 4> phi_plus{inv_sqrt2, 0.0, 0.0, inv_sqrt2};
    const std::array<cplx, 4> phi_minus{inv_sqrt2, 0.0, 0.0, -inv_sqrt2};
    switch (tag) {
        case Omega::omega1:
            return Ensemble({0.5, 0.5}, {DensityMatrix::basis_state(4, 0),
                                         DensityMatrix::basis_state(4, 3)});
        case Omega::omega2:
            return Ensemble({0.5, 0.5},
                            {DensityMatrix::pure(phi_plus), DensityMatrix::pure(phi_minus)});
        case Omega::omega3:
            return Ensemble({0.5, 0.5}, {DensityMatrix::basis_state(4, 0),
                                         DensityMatrix::pure(phi_minus)});
    }
    throw std::invalid_argument("make_ensemble: unknown tag");
}

Ensemble make_ensemble(const std::string& tag) {
    if (tag == "omega1") return make_ensemble(Omega::omega1);
    if (tag == "omega2") return make_ensemble(Omega::omega2);
    if (tag == "omega3") return make_ensemble(Omega::omega3);
    throw std::invalid_argument("make_ensemble: unknown tag '" + tag + "'");
}

}  // namespace switchsim
