#pragma once

#include <array>
#include <span>

#include "switchsim/matrix.hpp"

namespace switchsim {

// Tolerances shared across the library.
inline constexpr double kProbClampTol = 1e-12;   // negative entries above this are noise
inline constexpr double kProbSumTol = 1e-12;     // probability vectors sum to 1 within this
inline constexpr double kChannelMergeTol = 1e-12;  // channels equal entrywise within this merge
inline constexpr double kWeightDropTol = 1e-14;  // branch weights below this are dropped

// A Pauli channel rho -> sum_i p_i P_i rho P_i over the Pauli basis
// {I, X, Y, Z} (dim 2) or the sixteen tensor products
// {I(x)I, I(x)X, ..., Z(x)Z} in row-major factor order (dim 4).
// The probability vector fully describes the channel.
class PauliChannel {
public:
    PauliChannel(int dim, std::span<const double> probs);

    static PauliChannel identity(int dim);

    int dim() const { return dim_; }
    int basis_size() const { return dim_ * dim_; }
    std::span<const double> probs() const {
        return {p_.data(), static_cast<std::size_t>(basis_size())};
    }
    double operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }

    // Diagonal Bloch action r -> (fx*rx, fy*ry, fz*rz); dim 2 only.
    std::array<double, 3> bloch_multipliers() const;

private:
    int dim_ = 2;
    std::array<double, 16> p_{};
};

// Named single-qubit channel families.
PauliChannel make_depolarizing_d2(double p);   // p in [0, 4/3]
PauliChannel make_bit_phase_flip(double p);    // p in [0, 1]
PauliChannel make_Q_channel(double p, double q);  // p,q >= 0, p+q <= 1
PauliChannel make_Q_tilde(double p);           // Q with p -> 1/3+p, q -> 1/2-p

// Depolarizing strength that the anticommutator branch maps to itself,
// p* = 2(1 - 1/sqrt(3)).
double p_star();

// Sequential composition. For Pauli channels this is group convolution of
// the probability vectors (phases drop), and it commutes.
PauliChannel compose(const PauliChannel& ch1, const PauliChannel& ch2);

// The Pauli basis element with the given index as a dense matrix.
CMat pauli_matrix(int dim, int index);

// Group structure of the Pauli basis modulo phases: the index of P_i * P_j,
// and whether P_i and P_j anticommute. Index tables cover both dims.
int pauli_product_index(int dim, int i, int j);
bool pauli_anticommute(int dim, int i, int j);

}  // namespace switchsim
