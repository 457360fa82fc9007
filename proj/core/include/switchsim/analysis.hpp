#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "switchsim/discrimination.hpp"

namespace switchsim {

// ---------------------------------------------------------------------------
// Channel families and protocol columns

struct ChannelFamily {
    std::string name;
    int dim;
    std::vector<std::string> params;
    std::function<PauliChannel(std::span<const double>)> make;
};

// depolarizing2, bitphase, Q, Qtilde, depolarizing4, delta, W.
ChannelFamily family_by_name(const std::string& name);
// Fixed probability vector, no parameters.
ChannelFamily pauli_family(const std::vector<double>& probs);

struct ProtocolSpec {
    enum class Kind { channel, superswitch, blind_povm, flipped_povm, multicopy };
    Kind kind;
    int arg = 0;  // superswitch order, or copy count

    std::string label() const;
    static ProtocolSpec parse(const std::string& text);
};

// ---------------------------------------------------------------------------
// Parameter sweeps

struct GridAxis {
    std::string name;
    double start;
    double stop;
    int points;  // >= 2

    double value(int i) const { return start + (stop - start) * i / (points - 1); }
};

struct SweepTable {
    std::vector<std::string> parameter_names;
    std::vector<std::string> value_names;
    // One row per grid point: parameter values followed by protocol values,
    // rows in grid order (first axis outermost).
    std::vector<std::vector<double>> rows;
};

struct SweepOptions {
    int order_cap = -1;  // -1: per-dim default (8 for dim 2, 2 for dim 4)
    std::size_t max_branches = kDefaultMaxBranches;
};

int default_order_cap(int dim);

SweepTable sweep(const ChannelFamily& family, const std::vector<ProtocolSpec>& protocols,
                 const Ensemble& ensemble, const std::vector<GridAxis>& grid,
                 const SweepOptions& options = {});

// ---------------------------------------------------------------------------
// Monte Carlo region volumes over the Pauli tetrahedron

// Guessing values for the orthogonal pair at one tetrahedron point.
struct ProtocolValues {
    double channel = 0.0;
    double sw = 0.0;
    double ss1 = 0.0;
    double ss2 = 0.0;
};

struct RegionPredicate {
    std::string name;
    int max_order;  // highest superswitch order the predicate reads; -1 = none
    std::function<bool(const ProtocolValues&)> accept;
};

// Named predicates: switch_gt_channel, ss1_gt_channel_and_switch,
// ss2_gt_all, switch_gt_all, ss1_gt_all. Dominance is strict with margin
// 1e-12.
RegionPredicate region_predicate(const std::string& name);
std::vector<std::string> region_predicate_names();

struct RegionEstimate {
    std::string predicate;
    long long samples = 0;
    std::uint64_t seed = 0;
    std::string rng;
    long long hits = 0;
    double volume = 0.0;
    double ratio_to_tetrahedron = 0.0;
    double standard_error = 0.0;  // on the volume
};

// Draws `samples` points uniformly from {p1,p2,p3 >= 0, p1+p2+p3 <= 1} by
// rejection from the unit cube and counts predicate hits. Deterministic for a
// given seed regardless of `threads`.
RegionEstimate region_volume(const RegionPredicate& predicate, long long samples,
                             std::uint64_t seed, int threads = 1);

// ---------------------------------------------------------------------------
// Superswitch sequences and their limits

struct SequenceOptions {
    int order_cap = -1;
    std::size_t max_branches = kDefaultMaxBranches;
};

// Entry k = protocol guessing of the order-k superswitch of E.
std::vector<double> superswitch_sequence(const PauliChannel& E, int max_order,
                                         const Ensemble& ensemble,
                                         const SequenceOptions& options = {});

// Per-branch-optimal guessing of the stationary mixture
// alpha D_star + beta D_{4/3} + gamma Id. The triple must be a fixed point of
// the recurrence (residual < 1e-9).
double limiting_guessing(const std::array<double, 3>& triple, const Ensemble& ensemble);

}  // namespace switchsim
