#include "switchsim/pauli_channel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace switchsim {

namespace {

void check_dim(int dim) {
    if (dim != 2 && dim != 4)
        throw std::invalid_argument("PauliChannel: dim must be 2 or 4");
}

// Symplectic encoding of the single-qubit basis {I, X, Y, Z}: a pair of bits
// (x, z) with multiplication = XOR and anticommutation given by the
// symplectic form x1*z2 + z1*x2 (mod 2).
constexpr int kXBit[4] = {0, 1, 1, 0};
constexpr int kZBit[4] = {0, 0, 1, 1};

int product1(int i, int j) {
    const int x = kXBit[i] ^ kXBit[j];
    const int z = kZBit[i] ^ kZBit[j];
    for (int k = 0; k < 4; ++k)
        if (kXBit[k] == x && kZBit[k] == z) return k;
    return 0;
}

bool anticommute1(int i, int j) {
    return ((kXBit[i] * kZBit[j] + kZBit[i] * kXBit[j]) & 1) != 0;
}

struct PauliTables {
    std::array<std::array<std::uint8_t, 16>, 16> prod{};
    std::array<std::array<bool, 16>, 16> anti{};
};

PauliTables build_tables(int dim) {
    PauliTables t;
    const int n = dim * dim;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (dim == 2) {
                t.prod[i][j] = static_cast<std::uint8_t>(product1(i, j));
                t.anti[i][j] = anticommute1(i, j);
            } else {
                const int a1 = i / 4, b1 = i % 4;
                const int a2 = j / 4, b2 = j % 4;
                t.prod[i][j] = static_cast<std::uint8_t>(4 * product1(a1, a2) + product1(b1, b2));
                t.anti[i][j] = anticommute1(a1, a2) != anticommute1(b1, b2);
            }
        }
    }
    return t;
}

const PauliTables& tables(int dim) {
    static const PauliTables t2 = build_tables(2);
    static const PauliTables t4 = build_tables(4);
    return dim == 2 ? t2 : t4;
}

}  // namespace

PauliChannel::PauliChannel(int dim, std::span<const double> probs) : dim_(dim) {
    check_dim(dim);
    const int n = basis_size();
    if (static_cast<int>(probs.size()) != n)
        throw std::invalid_argument("PauliChannel: probability vector has wrong length");
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double v = probs[static_cast<std::size_t>(i)];
        if (v < 0.0) {
            if (v < -kProbClampTol) {
                std::ostringstream os;
                os << "PauliChannel: entry " << i << " = " << v << " is negative beyond "
                   << -kProbClampTol;
                throw std::invalid_argument(os.str());
            }
            v = 0.0;
        }
        p_[static_cast<std::size_t>(i)] = v;
        sum += v;
    }
    if (std::abs(sum - 1.0) > kProbSumTol)
        throw std::invalid_argument("PauliChannel: entries must sum to 1");
}

PauliChannel PauliChannel::identity(int dim) {
    check_dim(dim);
    std::array<double, 16> p{};
    p[0] = 1.0;
    return PauliChannel(dim, {p.data(), static_cast<std::size_t>(dim * dim)});
}

std::array<double, 3> PauliChannel::bloch_multipliers() const {
    if (dim_ != 2)
        throw std::invalid_argument("bloch_multipliers: defined for dim 2 only");
    return {p_[0] + p_[1] - p_[2] - p_[3],
            p_[0] - p_[1] + p_[2] - p_[3],
            p_[0] - p_[1] - p_[2] + p_[3]};
}

PauliChannel make_depolarizing_d2(double p) {
    if (!(p >= 0.0 && p <= 4.0 / 3.0))
        throw std::domain_error("make_depolarizing_d2: p must lie in [0, 4/3]");
    const std::array<double, 4> v{1.0 - 3.0 * p / 4.0, p / 4.0, p / 4.0, p / 4.0};
    return PauliChannel(2, v);
}

PauliChannel make_bit_phase_flip(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("make_bit_phase_flip: p must lie in [0, 1]");
    const std::array<double, 4> v{1.0 - p, 0.0, p, 0.0};
    return PauliChannel(2, v);
}

PauliChannel make_Q_channel(double p, double q) {
    if (!(p >= 0.0 && q >= 0.0 && p + q <= 1.0))
        throw std::domain_error("make_Q_channel: need p >= 0, q >= 0, p + q <= 1");
    const std::array<double, 4> v{1.0 - p - q, 0.0, p, q};
    return PauliChannel(2, v);
}

PauliChannel make_Q_tilde(double p) {
    if (!(p >= -1.0 / 3.0 && p <= 1.0 / 3.0))
        throw std::domain_error("make_Q_tilde: p must lie in [-1/3, 1/3]");
    return make_Q_channel(1.0 / 3.0 + p, 0.5 - p);
}

double p_star() { return 2.0 * (1.0 - 1.0 / std::numbers::sqrt3); }

PauliChannel compose(const PauliChannel& ch1, const PauliChannel& ch2) {
    if (ch1.dim() != ch2.dim())
        throw std::invalid_argument("compose: channel dimensions differ");
    const int n = ch1.basis_size();
    const auto& t = tables(ch1.dim());
    std::array<double, 16> acc{};
    for (int i = 0; i < n; ++i) {
        const double ri = ch1[i];
        if (ri == 0.0) continue;
        for (int j = 0; j < n; ++j) acc[t.prod[i][j]] += ri * ch2[j];
    }
    return PauliChannel(ch1.dim(), {acc.data(), static_cast<std::size_t>(n)});
}

CMat pauli_matrix(int dim, int index) {
    check_dim(dim);
    static const auto single = [] {
        std::array<CMat, 4> m;
        for (auto& e : m) e = CMat(2);
        m[0](0, 0) = 1;  m[0](1, 1) = 1;               // I
        m[1](0, 1) = 1;  m[1](1, 0) = 1;               // X
        m[2](0, 1) = {0, -1};  m[2](1, 0) = {0, 1};    // Y
        m[3](0, 0) = 1;  m[3](1, 1) = -1;              // Z
        return m;
    }();
    if (dim == 2) {
        if (index < 0 || index >= 4) throw std::invalid_argument("pauli_matrix: bad index");
        return single[static_cast<std::size_t>(index)];
    }
    if (index < 0 || index >= 16) throw std::invalid_argument("pauli_matrix: bad index");
    const CMat& a = single[static_cast<std::size_t>(index / 4)];
    const CMat& b = single[static_cast<std::size_t>(index % 4)];
    CMat r(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

int pauli_product_index(int dim, int i, int j) {
    check_dim(dim);
    return tables(dim).prod[i][j];
}

bool pauli_anticommute(int dim, int i, int j) {
    check_dim(dim);
    return tables(dim).anti[i][j];
}

}  // namespace switchsim
