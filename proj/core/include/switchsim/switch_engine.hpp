#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "switchsim/pauli_channel.hpp"

namespace switchsim {

// Thrown when a superswitch expansion would exceed its branch budget.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxBranches = 1'000'000;

// One measurement outcome of the control ancillas: a channel together with
// the probability of ending up in it.
struct Branch {
    double weight;
    PauliChannel channel;
};

// Classical mixture of Pauli channels left after measuring every control
// ancilla of a superswitch. Zero-weight branches are dropped and channels
// equal entrywise within kChannelMergeTol are merged at construction, so the
// branch list is canonical: sorted by channel vector, weights summing to 1.
class BranchDistribution {
public:
    BranchDistribution(std::vector<Branch> branches, int order);

    int order() const { return order_; }
    int dim() const { return branches_[0].channel.dim(); }
    const std::vector<Branch>& branches() const { return branches_; }
    std::size_t size() const { return branches_.size(); }

private:
    int order_;
    std::vector<Branch> branches_;
};

// Weighted anticommutator/commutator channel of two Pauli channels. A weight
// below kWeightDropTol comes back as exactly 0 with no channel.
struct UpdateResult {
    double weight = 0.0;
    std::optional<PauliChannel> channel;
};

UpdateResult update_acom(const PauliChannel& r1, const PauliChannel& r2);
UpdateResult update_com(const PauliChannel& r1, const PauliChannel& r2);

// Quantum switch of two channels with the control in |+><+|: the
// anticommutator branch and the commutator branch.
BranchDistribution switch_pair(const PauliChannel& E, const PauliChannel& F);

// n-th order superswitch of 2^(n+1) copies of E. Order 0 is switch_pair(E,E);
// order n combines every ordered branch pair of two independent copies of the
// order n-1 distribution through the update rules and merges duplicates.
BranchDistribution superswitch(const PauliChannel& E, int order,
                               std::size_t max_branches = kDefaultMaxBranches);

// One recurrence step: order n-1 distribution in, order n distribution out.
BranchDistribution superswitch_step(const BranchDistribution& prev,
                                    std::size_t max_branches = kDefaultMaxBranches);

// First-order superswitch with the four channel slots filled independently.
BranchDistribution first_order(const PauliChannel& E, const PauliChannel& F,
                               const PauliChannel& Et, const PauliChannel& Ft,
                               std::size_t max_branches = kDefaultMaxBranches);

// The eight first-order outcomes of four copies of E, labeled by the signs
// (s1, s2, s) of the three ancilla measurements (+1 or -1 each). Zero-weight
// outcomes keep their label and carry no channel.
struct LabeledBranch {
    int s1, s2, s;
    double weight = 0.0;
    std::optional<PauliChannel> channel;
};

std::array<LabeledBranch, 8> first_order_branches(const PauliChannel& E);

// First-order superswitch with the two inner controls entangled in a Bell
// state: four outcomes indexed by (s1*s2, s), each the weight-proportional
// mixture of the two matching general outcomes.
BranchDistribution correlated_first_order(const PauliChannel& E);

// Mixture recurrence over {D_star, D_{4/3}, Id} branch channels. Returns the
// trajectory (steps+1 triples, the input first); each iterate stays on the
// simplex. Inputs off the simplex by more than 1e-12 are rejected.
std::vector<std::array<double, 3>> fixed_point_recurrence(double alpha0, double beta0,
                                                          double gamma0, int steps);

// The three stationary triples of the recurrence.
std::array<std::array<double, 3>, 3> stationary_triples();

}  // namespace switchsim
