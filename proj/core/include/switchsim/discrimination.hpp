#pragma once

#include <vector>

#include "switchsim/states.hpp"
#include "switchsim/switch_engine.hpp"

namespace switchsim {

enum class Strategy {
    helstrom,
    closed_form_depolarization,
    per_branch_optimal,
    fixed_povm,
};

struct GuessingResult {
    double value;
    Strategy strategy;
};

// Positive operator-valued measure: Hermitian PSD elements summing to the
// identity (tolerance 1e-10). Null elements are allowed.
class Povm {
public:
    Povm(int dim, std::vector<CMat> elements);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<CMat>& elements() const { return elements_; }

private:
    int dim_;
    std::vector<CMat> elements_;
};

// Sum of |eigenvalues|. Rejects matrices that are not Hermitian within 1e-10.
double trace_norm_hermitian(const CMat& m);

// Optimal two-state guessing probability, 1/2 + |q1 rho1 - q2 rho2|_1 / 2.
// Dim 2 uses the Bloch closed form max{|q1-q2|, |q1 r1 - q2 r2|_2}; dim 4
// diagonalizes the Helstrom operator.
GuessingResult helstrom_two(const Ensemble& e);

// helstrom_two of the ensemble pushed through one application of `ch`. The
// dim-2 path acts on Bloch vectors directly.
double helstrom_two_after_channel(const Ensemble& e, const PauliChannel& ch);

// Guessing through a depolarizing channel given the clean-ensemble optimum
// P_g for n equiprobable states. With known_range the measurement is flipped
// past p = 1; without it the original measurement is kept on the whole range.
double depolarization_guessing_closed_form(double pg, double p, int n, bool known_range);

// Helstrom bound for n copies of an orthogonal pair through depolarizing
// noise of strength p.
double multicopy_orthogonal_depolarization(double p, int n);

// Whether the POVM satisfies the minimum-error optimality conditions
// sum_i q_i rho_i Pi_i - q_j rho_j >= 0 for all j (slack 1e-9).
bool check_optimality(const Ensemble& e, const Povm& povm);

// Average over branches of the per-branch Helstrom optimum; two-state
// ensembles only.
GuessingResult protocol_guessing(const BranchDistribution& branches, const Ensemble& e);

// sum_i q_i tr(Pi_i rho_i) for a fixed measurement.
GuessingResult guessing_with_povm(const Ensemble& e, const Povm& povm);

// Helstrom-optimal two-element projective POVM for a two-state ensemble.
Povm helstrom_povm(const Ensemble& e);

// The POVM with every element's Bloch vector negated; dim 2 only.
Povm bloch_flipped(const Povm& povm);

}  // namespace switchsim
