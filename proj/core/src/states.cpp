#include "switchsim/states.hpp"

#include <cmath>
#include <stdexcept>

namespace switchsim {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kBlochNormTol = 1e-12;

}  // namespace

BlochVector::BlochVector(std::array<double, 3> r) : r_(r) {
    if (norm() > 1.0 + kBlochNormTol)
        throw std::domain_error("BlochVector: norm exceeds 1");
}

double BlochVector::norm() const {
    return std::sqrt(r_[0] * r_[0] + r_[1] * r_[1] + r_[2] * r_[2]);
}

DensityMatrix::DensityMatrix(int dim, const CMat& entries) : dim_(dim), m_(entries) {
    if (dim != 2 && dim != 4) throw std::invalid_argument("DensityMatrix: dim must be 2 or 4");
    if (entries.size() != dim) throw std::invalid_argument("DensityMatrix: size mismatch");
    if (!m_.is_hermitian(kHermTol)) throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(m_.trace() - cplx{1.0}) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace must be 1");
    const auto ev = hermitian_eigenvalues(m_);
    if (ev.front() < -kPsdTol)
        throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

DensityMatrix DensityMatrix::basis_state(int dim, int k) {
    CMat m(dim);
    m(k, k) = 1.0;
    return DensityMatrix(dim, m);
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0 / dim;
    return DensityMatrix(dim, m);
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> amplitudes) {
    const int dim = static_cast<int>(amplitudes.size());
    double n2 = 0.0;
    for (const auto& a : amplitudes) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > 1e-10)
        throw std::invalid_argument("DensityMatrix::pure: amplitudes not normalized");
    CMat m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m(i, j) = amplitudes[static_cast<std::size_t>(i)] *
                      std::conj(amplitudes[static_cast<std::size_t>(j)]);
    return DensityMatrix(dim, m);
}

BlochVector bloch_of(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("bloch_of: defined for dim 2 only");
    const CMat& m = rho.entries();
    const double x = (m(0, 1) + m(1, 0)).real();
    const double y = (cplx{0, 1} * (m(0, 1) - m(1, 0))).real();
    const double z = (m(0, 0) - m(1, 1)).real();
    return BlochVector(x, y, z);
}

DensityMatrix state_of(const BlochVector& b) {
    const auto& r = b.r();
    CMat m(2);
    m(0, 0) = 0.5 * (1.0 + r[2]);
    m(1, 1) = 0.5 * (1.0 - r[2]);
    m(0, 1) = 0.5 * cplx{r[0], -r[1]};
    m(1, 0) = 0.5 * cplx{r[0], r[1]};
    return DensityMatrix(2, m);
}

DensityMatrix apply_channel(const PauliChannel& ch, const DensityMatrix& rho) {
    if (ch.dim() != rho.dim())
        throw std::invalid_argument("apply_channel: dimension mismatch");
    const int n = ch.basis_size();
    CMat out(rho.dim());
    for (int i = 0; i < n; ++i) {
        const double p = ch[i];
        if (p == 0.0) continue;
        const CMat pm = pauli_matrix(ch.dim(), i);
        out += p * (pm * rho.entries() * pm.adjoint());
    }
    return DensityMatrix(rho.dim(), out);
}

Ensemble::Ensemble(std::vector<double> priors, std::vector<DensityMatrix> states)
    : priors_(std::move(priors)), states_(std::move(states)) {
    if (priors_.size() != states_.size() || states_.size() < 2)
        throw std::invalid_argument("Ensemble: need matching priors and at least two states");
    double sum = 0.0;
    for (double q : priors_) {
        if (q < 0.0) throw std::invalid_argument("Ensemble: priors must be nonnegative");
        sum += q;
    }
    if (std::abs(sum - 1.0) > kProbSumTol)
        throw std::invalid_argument("Ensemble: priors must sum to 1");
    for (const auto& s : states_)
        if (s.dim() != states_[0].dim())
            throw std::invalid_argument("Ensemble: states must share one dimension");
}

Ensemble orthogonal_pair() {
    return Ensemble({0.5, 0.5},
                    {DensityMatrix::basis_state(2, 0), DensityMatrix::basis_state(2, 1)});
}

}  // namespace switchsim
