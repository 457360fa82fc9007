#pragma once

#include <array>
#include <span>
#include <vector>

#include "switchsim/matrix.hpp"
#include "switchsim/pauli_channel.hpp"

namespace switchsim {

// Point in the Bloch ball, |r| <= 1 (+1e-12 slack for round-off).
class BlochVector {
public:
    explicit BlochVector(std::array<double, 3> r);
    BlochVector(double x, double y, double z) : BlochVector(std::array<double, 3>{x, y, z}) {}

    const std::array<double, 3>& r() const { return r_; }
    double norm() const;

private:
    std::array<double, 3> r_;
};

// Hermitian, unit-trace, positive-semidefinite matrix; dim 2 or 4.
class DensityMatrix {
public:
    DensityMatrix(int dim, const CMat& entries);

    int dim() const { return dim_; }
    const CMat& entries() const { return m_; }

    static DensityMatrix basis_state(int dim, int k);   // |k><k|
    static DensityMatrix maximally_mixed(int dim);
    // |psi><psi| from amplitudes (must be normalized within 1e-10).
    static DensityMatrix pure(std::span<const cplx> amplitudes);

private:
    int dim_;
    CMat m_;
};

BlochVector bloch_of(const DensityMatrix& rho);       // dim 2
DensityMatrix state_of(const BlochVector& b);          // (1/2)(I + r.sigma)

// rho -> sum_i p_i P_i rho P_i
DensityMatrix apply_channel(const PauliChannel& ch, const DensityMatrix& rho);

// States with prior probabilities; the discrimination problem instance.
class Ensemble {
public:
    Ensemble(std::vector<double> priors, std::vector<DensityMatrix> states);

    int dim() const { return states_[0].dim(); }
    int size() const { return static_cast<int>(states_.size()); }
    const std::vector<double>& priors() const { return priors_; }
    const std::vector<DensityMatrix>& states() const { return states_; }

private:
    std::vector<double> priors_;
    std::vector<DensityMatrix> states_;
};

// Equal priors on |0><0|, |1><1|.
Ensemble orthogonal_pair();

}  // namespace switchsim
