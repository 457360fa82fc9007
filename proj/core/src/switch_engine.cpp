#include "switchsim/switch_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace switchsim {

namespace {

// Splits the group convolution of two probability vectors by commutation:
// commuting Kraus pairs feed the anticommutator channel, anticommuting pairs
// the commutator channel. [X,Y] ~ Z etc., so cross products land on the
// remaining axis. Index pairs are accumulated as i<=j pair sums, which makes
// the result bitwise symmetric in its arguments.
UpdateResult update_split(const PauliChannel& r1, const PauliChannel& r2, bool anticommuting) {
    if (r1.dim() != r2.dim())
        throw std::invalid_argument("update rule: channel dimensions differ");
    const int dim = r1.dim();
    const int n = r1.basis_size();
    std::array<double, 16> acc{};
    double w = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (pauli_anticommute(dim, i, j) != anticommuting) continue;
            const double t = i == j ? r1[i] * r2[i] : r1[i] * r2[j] + r1[j] * r2[i];
            if (t == 0.0) continue;
            acc[static_cast<std::size_t>(pauli_product_index(dim, i, j))] += t;
            w += t;
        }
    }
    if (w < kWeightDropTol) return {};
    for (int k = 0; k < n; ++k) acc[static_cast<std::size_t>(k)] /= w;
    return {w, PauliChannel(dim, {acc.data(), static_cast<std::size_t>(n)})};
}

bool channels_equal(const PauliChannel& a, const PauliChannel& b) {
    const int n = a.basis_size();
    for (int k = 0; k < n; ++k)
        if (std::abs(a[k] - b[k]) > kChannelMergeTol) return false;
    return true;
}

// All ordered branch pairs of two distributions pushed through both update
// rules. When the distributions are the same object the unordered half is
// enumerated with doubled weights; the update rules are symmetric, so the
// result is identical.
std::vector<Branch> combine_raw(const BranchDistribution& a, const BranchDistribution& b,
                                std::size_t max_branches) {
    const bool same = &a == &b;
    const std::size_t pre_merge = 2 * a.size() * b.size();
    if (pre_merge > max_branches) {
        std::ostringstream os;
        os << "superswitch: expansion would produce " << pre_merge
           << " branches before merging, exceeding the budget of " << max_branches;
        throw resource_error(os.str());
    }
    std::vector<Branch> raw;
    raw.reserve(same ? a.size() * (a.size() + 1) : pre_merge);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::size_t j0 = same ? i : 0;
        for (std::size_t j = j0; j < b.size(); ++j) {
            const double pair_w =
                (same && j > i ? 2.0 : 1.0) * a.branches()[i].weight * b.branches()[j].weight;
            for (bool anti : {false, true}) {
                const UpdateResult u =
                    update_split(a.branches()[i].channel, b.branches()[j].channel, anti);
                if (u.weight > 0.0) raw.push_back({pair_w * u.weight, *u.channel});
            }
        }
    }
    return raw;
}

}  // namespace

BranchDistribution::BranchDistribution(std::vector<Branch> branches, int order)
    : order_(order) {
    if (order < 0) throw std::invalid_argument("BranchDistribution: order must be >= 0");
    std::vector<Branch> kept;
    kept.reserve(branches.size());
    for (auto& b : branches) {
        if (b.weight < 0.0) throw std::invalid_argument("BranchDistribution: negative weight");
        if (b.weight < kWeightDropTol) continue;
        kept.push_back(std::move(b));
    }
    if (kept.empty()) throw std::invalid_argument("BranchDistribution: no branches left");
    const int dim = kept[0].channel.dim();
    for (const auto& b : kept)
        if (b.channel.dim() != dim)
            throw std::invalid_argument("BranchDistribution: mixed dimensions");

    std::sort(kept.begin(), kept.end(), [](const Branch& x, const Branch& y) {
        return std::lexicographical_compare(x.channel.probs().begin(), x.channel.probs().end(),
                                            y.channel.probs().begin(), y.channel.probs().end());
    });

    const int n = dim * dim;
    std::size_t i = 0;
    while (i < kept.size()) {
        std::size_t j = i + 1;
        double w = kept[i].weight;
        std::array<double, 16> mix{};
        for (int k = 0; k < n; ++k) mix[static_cast<std::size_t>(k)] = w * kept[i].channel[k];
        while (j < kept.size() && channels_equal(kept[i].channel, kept[j].channel)) {
            w += kept[j].weight;
            for (int k = 0; k < n; ++k)
                mix[static_cast<std::size_t>(k)] += kept[j].weight * kept[j].channel[k];
            ++j;
        }
        for (int k = 0; k < n; ++k) mix[static_cast<std::size_t>(k)] /= w;
        branches_.push_back({w, PauliChannel(dim, {mix.data(), static_cast<std::size_t>(n)})});
        i = j;
    }

    double total = 0.0;
    for (const auto& b : branches_) total += b.weight;
    if (std::abs(total - 1.0) > 1e-10)
        throw std::invalid_argument("BranchDistribution: weights must sum to 1");
}

UpdateResult update_acom(const PauliChannel& r1, const PauliChannel& r2) {
    return update_split(r1, r2, false);
}

UpdateResult update_com(const PauliChannel& r1, const PauliChannel& r2) {
    return update_split(r1, r2, true);
}

BranchDistribution switch_pair(const PauliChannel& E, const PauliChannel& F) {
    std::vector<Branch> raw;
    for (bool anti : {false, true}) {
        const UpdateResult u = update_split(E, F, anti);
        if (u.weight > 0.0) raw.push_back({u.weight, *u.channel});
    }
    return BranchDistribution(std::move(raw), 0);
}

BranchDistribution superswitch(const PauliChannel& E, int order, std::size_t max_branches) {
    if (order < 0) throw std::invalid_argument("superswitch: order must be >= 0");
    BranchDistribution dist = switch_pair(E, E);
    for (int k = 1; k <= order; ++k) dist = superswitch_step(dist, max_branches);
    return dist;
}

BranchDistribution superswitch_step(const BranchDistribution& prev, std::size_t max_branches) {
    return BranchDistribution(combine_raw(prev, prev, max_branches), prev.order() + 1);
}

BranchDistribution first_order(const PauliChannel& E, const PauliChannel& F,
                               const PauliChannel& Et, const PauliChannel& Ft,
                               std::size_t max_branches) {
    const BranchDistribution inner1 = switch_pair(E, F);
    const BranchDistribution inner2 = switch_pair(Et, Ft);
    return BranchDistribution(combine_raw(inner1, inner2, max_branches), 1);
}

std::array<LabeledBranch, 8> first_order_branches(const PauliChannel& E) {
    std::array<UpdateResult, 2> inner;  // index 0 = '+', 1 = '-'
    inner[0] = update_acom(E, E);
    inner[1] = update_com(E, E);

    std::array<LabeledBranch, 8> out;
    std::size_t idx = 0;
    for (int i1 = 0; i1 < 2; ++i1) {
        for (int i2 = 0; i2 < 2; ++i2) {
            for (int io = 0; io < 2; ++io) {
                LabeledBranch lb;
                lb.s1 = i1 == 0 ? +1 : -1;
                lb.s2 = i2 == 0 ? +1 : -1;
                lb.s = io == 0 ? +1 : -1;
                const auto& c1 = inner[static_cast<std::size_t>(i1)];
                const auto& c2 = inner[static_cast<std::size_t>(i2)];
                if (c1.weight > 0.0 && c2.weight > 0.0) {
                    const UpdateResult u = io == 0 ? update_acom(*c1.channel, *c2.channel)
                                                   : update_com(*c1.channel, *c2.channel);
                    lb.weight = c1.weight * c2.weight * u.weight;
                    if (lb.weight >= kWeightDropTol)
                        lb.channel = u.channel;
                    else
                        lb.weight = 0.0;
                }
                out[idx++] = lb;
            }
        }
    }
    return out;
}

BranchDistribution correlated_first_order(const PauliChannel& E) {
    const auto labeled = first_order_branches(E);
    const int n = E.basis_size();
    std::vector<Branch> raw;
    // Outcome (x, s) with x = s1*s2 pools the two matching general outcomes.
    for (int x : {+1, -1}) {
        for (int s : {+1, -1}) {
            double w = 0.0;
            std::array<double, 16> mix{};
            for (const auto& lb : labeled) {
                if (lb.s1 * lb.s2 != x || lb.s != s || lb.weight == 0.0) continue;
                w += lb.weight;
                for (int k = 0; k < n; ++k)
                    mix[static_cast<std::size_t>(k)] += lb.weight * (*lb.channel)[k];
            }
            if (w < kWeightDropTol) continue;
            for (int k = 0; k < n; ++k) mix[static_cast<std::size_t>(k)] /= w;
            raw.push_back({w, PauliChannel(E.dim(), {mix.data(), static_cast<std::size_t>(n)})});
        }
    }
    return BranchDistribution(std::move(raw), 1);
}

std::vector<std::array<double, 3>> fixed_point_recurrence(double alpha0, double beta0,
                                                          double gamma0, int steps) {
    if (steps < 0) throw std::invalid_argument("fixed_point_recurrence: steps must be >= 0");
    if (alpha0 < 0.0 || beta0 < 0.0 || gamma0 < 0.0 ||
        std::abs(alpha0 + beta0 + gamma0 - 1.0) > 1e-12)
        throw std::domain_error("fixed_point_recurrence: (alpha, beta, gamma) must lie on the simplex");

    // c = Pr(commutator) and d = 2*beta for the D_star pair; the branch set
    // {D_star, D_{4/3}, Id} is closed under both update rules, so the mixture
    // weights evolve autonomously.
    const double beta_star = p_star() / 4.0;
    const double c = 6.0 * beta_star * beta_star;
    const double d = 2.0 * beta_star;

    std::vector<std::array<double, 3>> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    out.push_back({alpha0, beta0, gamma0});
    double a = alpha0, b = beta0, g = gamma0;
    for (int k = 0; k < steps; ++k) {
        const double an = a * a * (1.0 - c) + 2.0 * a * b * (1.0 - d) + 2.0 * a * g;
        const double bn = a * a * c + 2.0 * a * b * d + (2.0 / 3.0) * b * b + 2.0 * b * g;
        const double gn = b * b / 3.0 + g * g;
        a = an;
        b = bn;
        g = gn;
        out.push_back({a, b, g});
    }
    return out;
}

std::array<std::array<double, 3>, 3> stationary_triples() {
    const double s3 = std::numbers::sqrt3;
    return {{{0.0, 0.0, 1.0},
             {0.5, 0.5 + (s3 - 2.0) / 4.0, (2.0 - s3) / 4.0},
             {0.0, 0.75, 0.25}}};
}

}  // namespace switchsim
