#include "switchsim/discrimination.hpp"

#include <cmath>
#include <stdexcept>

namespace switchsim {

namespace {

constexpr double kPovmTol = 1e-10;
constexpr double kOptimalitySlack = 1e-9;
constexpr double kResultTol = 1e-12;

GuessingResult make_result(double value, Strategy strategy, int n) {
    const double lo = strategy == Strategy::fixed_povm ? 0.0 : 1.0 / n;
    if (value < lo - kResultTol || value > 1.0 + kResultTol)
        throw std::logic_error("GuessingResult: value out of range");
    return {value, strategy};
}

std::array<double, 3> weighted_bloch_diff(const Ensemble& e) {
    const auto r1 = bloch_of(e.states()[0]).r();
    const auto r2 = bloch_of(e.states()[1]).r();
    const double q1 = e.priors()[0];
    const double q2 = e.priors()[1];
    return {q1 * r1[0] - q2 * r2[0], q1 * r1[1] - q2 * r2[1], q1 * r1[2] - q2 * r2[2]};
}

double norm3(const std::array<double, 3>& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

void require_two_states(const Ensemble& e, const char* who) {
    if (e.size() != 2)
        throw std::invalid_argument(std::string(who) + ": only two-state ensembles are supported");
}

CMat helstrom_operator(const Ensemble& e) {
    CMat h = e.states()[0].entries();
    h *= e.priors()[0];
    CMat h2 = e.states()[1].entries();
    h2 *= e.priors()[1];
    return h - h2;
}

}  // namespace

Povm::Povm(int dim, std::vector<CMat> elements) : dim_(dim), elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("Povm: no elements");
    CMat sum(dim);
    for (const auto& el : elements_) {
        if (el.size() != dim) throw std::invalid_argument("Povm: element size mismatch");
        if (!el.is_hermitian(kPovmTol)) throw std::invalid_argument("Povm: element not Hermitian");
        const auto ev = hermitian_eigenvalues(el);
        if (ev.front() < -kPovmTol)
            throw std::invalid_argument("Povm: element not positive semidefinite");
        sum += el;
    }
    if (sum.max_abs_diff(CMat::identity(dim)) > kPovmTol)
        throw std::invalid_argument("Povm: elements must sum to the identity");
}

double trace_norm_hermitian(const CMat& m) {
    if (!m.is_hermitian(1e-10))
        throw std::invalid_argument("trace_norm_hermitian: matrix is not Hermitian");
    double s = 0.0;
    for (double ev : hermitian_eigenvalues(m)) s += std::abs(ev);
    return s;
}

GuessingResult helstrom_two(const Ensemble& e) {
    require_two_states(e, "helstrom_two");
    const double dq = std::abs(e.priors()[0] - e.priors()[1]);
    double tn;
    if (e.dim() == 2) {
        tn = std::max(dq, norm3(weighted_bloch_diff(e)));
    } else {
        tn = trace_norm_hermitian(helstrom_operator(e));
    }
    return make_result(0.5 + 0.5 * tn, Strategy::helstrom, 2);
}

double helstrom_two_after_channel(const Ensemble& e, const PauliChannel& ch) {
    require_two_states(e, "helstrom_two_after_channel");
    if (e.dim() != ch.dim())
        throw std::invalid_argument("helstrom_two_after_channel: dimension mismatch");
    if (e.dim() == 2) {
        const auto f = ch.bloch_multipliers();
        auto v = weighted_bloch_diff(e);
        for (int k = 0; k < 3; ++k) v[static_cast<std::size_t>(k)] *= f[static_cast<std::size_t>(k)];
        const double dq = std::abs(e.priors()[0] - e.priors()[1]);
        return 0.5 + 0.5 * std::max(dq, norm3(v));
    }
    const Ensemble pushed(
        {e.priors()[0], e.priors()[1]},
        {apply_channel(ch, e.states()[0]), apply_channel(ch, e.states()[1])});
    return helstrom_two(pushed).value;
}

double depolarization_guessing_closed_form(double pg, double p, int n, bool known_range) {
    if (n < 2) throw std::domain_error("depolarization_guessing_closed_form: n must be >= 2");
    if (!(pg >= 1.0 / n - kResultTol && pg <= 1.0 + kResultTol))
        throw std::domain_error("depolarization_guessing_closed_form: P_g must lie in [1/n, 1]");
    if (!(p >= 0.0 && p <= 4.0 / 3.0))
        throw std::domain_error("depolarization_guessing_closed_form: p must lie in [0, 4/3]");
    if (known_range && p > 1.0) return (p - 1.0) * pg + (2.0 - p) / n;
    return (1.0 - p) * pg + p / n;
}

double multicopy_orthogonal_depolarization(double p, int n) {
    if (n < 1) throw std::domain_error("multicopy_orthogonal_depolarization: n must be >= 1");
    if (!(p >= 0.0 && p <= 4.0 / 3.0))
        throw std::domain_error("multicopy_orthogonal_depolarization: p must lie in [0, 4/3]");
    const double a = p / 2.0;
    const double b = 1.0 - p / 2.0;
    double binom = 1.0;
    double s = 0.0;
    for (int k = 0; k <= n; ++k) {
        s += binom * std::abs(std::pow(a, k) * std::pow(b, n - k) -
                              std::pow(a, n - k) * std::pow(b, k));
        binom = binom * (n - k) / (k + 1);
    }
    return 0.5 + 0.25 * s;
}

bool check_optimality(const Ensemble& e, const Povm& povm) {
    if (povm.dim() != e.dim() || povm.size() != e.size())
        throw std::invalid_argument("check_optimality: POVM does not match the ensemble");
    const int dim = e.dim();
    CMat g(dim);
    for (int i = 0; i < e.size(); ++i) {
        CMat t = e.states()[static_cast<std::size_t>(i)].entries() *
                 povm.elements()[static_cast<std::size_t>(i)];
        t *= e.priors()[static_cast<std::size_t>(i)];
        g += t;
    }
    // At an optimum the operator is Hermitian; a skew part means "not optimal".
    if (g.max_abs_diff(g.adjoint()) > kOptimalitySlack) return false;
    CMat sym = g + g.adjoint();
    sym *= 0.5;
    for (int j = 0; j < e.size(); ++j) {
        CMat d = e.states()[static_cast<std::size_t>(j)].entries();
        d *= e.priors()[static_cast<std::size_t>(j)];
        const auto ev = hermitian_eigenvalues(sym - d);
        if (ev.front() < -kOptimalitySlack) return false;
    }
    return true;
}

GuessingResult protocol_guessing(const BranchDistribution& branches, const Ensemble& e) {
    require_two_states(e, "protocol_guessing");
    if (branches.dim() != e.dim())
        throw std::invalid_argument("protocol_guessing: dimension mismatch");
    double total = 0.0;
    for (const auto& b : branches.branches()) {
        if (b.weight == 0.0) continue;
        total += b.weight * helstrom_two_after_channel(e, b.channel);
    }
    return make_result(total, Strategy::per_branch_optimal, 2);
}

GuessingResult guessing_with_povm(const Ensemble& e, const Povm& povm) {
    if (povm.dim() != e.dim() || povm.size() != e.size())
        throw std::invalid_argument("guessing_with_povm: POVM does not match the ensemble");
    double s = 0.0;
    for (int i = 0; i < e.size(); ++i) {
        const CMat t = povm.elements()[static_cast<std::size_t>(i)] *
                       e.states()[static_cast<std::size_t>(i)].entries();
        s += e.priors()[static_cast<std::size_t>(i)] * t.trace().real();
    }
    return make_result(s, Strategy::fixed_povm, e.size());
}

Povm helstrom_povm(const Ensemble& e) {
    require_two_states(e, "helstrom_povm");
    if (e.dim() != 2) throw std::invalid_argument("helstrom_povm: dim 2 only");
    const auto v = weighted_bloch_diff(e);
    const double nv = norm3(v);
    const double dq = e.priors()[0] - e.priors()[1];
    const CMat id = CMat::identity(2);
    if (nv < 1e-15) {
        // Identical weighted Bloch parts: always guess the likelier state.
        CMat zero(2);
        if (dq >= 0.0) return Povm(2, {id, zero});
        return Povm(2, {zero, id});
    }
    // Eigenprojectors of the Helstrom operator along the v axis.
    CMat vproj(2);
    for (int k = 0; k < 3; ++k) {
        CMat s = pauli_matrix(2, k + 1);
        s *= v[static_cast<std::size_t>(k)] / nv;
        vproj += s;
    }
    CMat pplus = id + vproj;
    pplus *= 0.5;
    CMat pminus = id - vproj;
    pminus *= 0.5;
    CMat pi1(2);
    if ((dq + nv) / 2.0 > 0.0) pi1 += pplus;
    if ((dq - nv) / 2.0 > 0.0) pi1 += pminus;
    return Povm(2, {pi1, id - pi1});
}

Povm bloch_flipped(const Povm& povm) {
    if (povm.dim() != 2) throw std::invalid_argument("bloch_flipped: dim 2 only");
    std::vector<CMat> flipped;
    flipped.reserve(povm.elements().size());
    for (const auto& el : povm.elements()) {
        CMat f = CMat::identity(2);
        f *= el.trace();
        flipped.push_back(f - el);
    }
    return Povm(2, std::move(flipped));
}

}  // namespace switchsim
