#include "switchsim/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace switchsim {

CMat& CMat::operator+=(const CMat& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMat& CMat::operator-=(const CMat& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMat& CMat::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

CMat CMat::adjoint() const {
    CMat r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

cplx CMat::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double CMat::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j)));
    return m;
}

double CMat::max_abs_diff(const CMat& o) const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j) - o(i, j)));
    return m;
}

bool CMat::is_hermitian(double tol) const {
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

CMat operator+(CMat a, const CMat& b) { return a += b; }
CMat operator-(CMat a, const CMat& b) { return a -= b; }

CMat operator*(const CMat& a, const CMat& b) {
    const int n = a.size();
    CMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

CMat operator*(cplx s, CMat a) { return a *= s; }

namespace {

double off_diagonal_norm(const CMat& a) {
    double s = 0.0;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMat& m, double tol, int max_sweeps) {
    if (!m.is_hermitian(1e-9))
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    const int n = m.size();
    CMat a = m;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) < tol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double abs_apq = std::abs(apq);
                if (abs_apq == 0.0) continue;
                const cplx phase = apq / abs_apq;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Unitary rotation in the (p,q) plane zeroing a_pq:
                //   u_pp = c, u_pq = s*phase, u_qp = -s*conj(phase), u_qq = c
                const double theta = 0.5 * std::atan2(2.0 * abs_apq, aqq - app);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                a(p, p) = app * c * c - 2.0 * s * c * abs_apq + aqq * s * s;
                a(q, q) = app * s * s + 2.0 * s * c * abs_apq + aqq * c * c;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace switchsim
