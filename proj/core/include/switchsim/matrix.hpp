#pragma once

#include <array>
#include <complex>
#include <vector>

namespace switchsim {

using cplx = std::complex<double>;

// Dense complex matrix of edge size <= 4, value semantics. Large enough for
// single- and two-qubit operators, which is all the library ever handles.
class CMat {
public:
    CMat() = default;
    explicit CMat(int n) : n_(n) {}

    static CMat identity(int n) {
        CMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int size() const { return n_; }

    cplx& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * 4 + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * 4 + c]; }

    CMat& operator+=(const CMat& o);
    CMat& operator-=(const CMat& o);
    CMat& operator*=(cplx s);

    CMat adjoint() const;
    cplx trace() const;

    // max_{i,j} |a_ij|
    double max_abs() const;
    // max_{i,j} |a_ij - b_ij|
    double max_abs_diff(const CMat& o) const;

    bool is_hermitian(double tol) const;

private:
    int n_ = 0;
    std::array<cplx, 16> a_{};
};

CMat operator+(CMat a, const CMat& b);
CMat operator-(CMat a, const CMat& b);
CMat operator*(const CMat& a, const CMat& b);
CMat operator*(cplx s, CMat a);

// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi rotations,
// stopping when the off-diagonal Frobenius norm drops below `tol`.
std::vector<double> hermitian_eigenvalues(const CMat& m, double tol = 1e-13,
                                          int max_sweeps = 100);

}  // namespace switchsim
