#ifndef QCAP_CIRCULATOR_HPP
#define QCAP_CIRCULATOR_HPP

#include <array>
#include <vector>

#include "qcap/linalg.hpp"

namespace qcap {

enum class Frame { LabFrame, RotatingFrame };

// Three hopping-coupled modes. Couplings are indexed by the mode they do
// NOT touch: g[2] couples 1<->2, g[0] couples 2<->3, g[1] couples 3<->1.
//
// Phase convention: a hop 1->2 picks up phi_3, 2->3 picks up phi_1 and the
// direct hop 1->3 picks up phi_2, so the loop 1->2->3 versus 1->3 carries the
// gauge flux phi_1 + phi_3 - phi_2.
struct CirculatorConfig {
    std::array<double, 3> omega{};  // rad/s
    std::array<double, 3> kappa{};  // rad/s
    std::array<double, 3> g{};      // rad/s
    std::array<double, 3> phi{};    // rad
    Frame frame = Frame::RotatingFrame;
    // Mode detunings from their rotating frames (RotatingFrame only).
    std::array<double, 3> rotating_detuning{};

    double gauge_flux() const { return phi[0] + phi[2] - phi[1]; }
    void validate() const;
};

/// Reference parameter set: omega = 2pi {1, 1.05, 2.05} GHz,
/// g = 2pi 1 GHz on every link, kappa = 2g, flux carried entirely by phi_1.
CirculatorConfig reference_circulator(double gauge_flux, Frame frame = Frame::RotatingFrame);

struct SweepResult {
    std::vector<double> detuning_grid;  // rad/s
    std::vector<Matrix3c> S_of_delta;
    std::vector<double> ratio_13_31;
    std::vector<double> insertion_loss_dB;
};

/// |Omega_1 + Omega_3 - Omega_2| <= tol.
bool pump_constraint_check(double Omega_1, double Omega_2, double Omega_3, double tol);

/// Hermitian coupling matrix H with H(j, k) the coefficient of a_j^dag a_k (rad/s).
Matrix3c coupling_hamiltonian(const CirculatorConfig& config);

/// Drift matrix of da/dt = M a + sqrt(kappa) a_in.
Matrix3c langevin_matrix(const CirculatorConfig& config);

/// i M + i diag(kappa)/2; Hermitian whenever M comes from a Hermitian Hamiltonian.
Matrix3c hamiltonian_generator(const Matrix3c& M, const std::array<double, 3>& kappa);

/// S(delta) = I - K (-i delta I - M)^-1 K with K = diag(sqrt(kappa)), a_out = S a_in.
Matrix3c scattering_matrix(const CirculatorConfig& config, double delta);
Matrix3c scattering_matrix(const Matrix3c& M, const std::array<double, 3>& kappa, double delta);

/// Amplitude for conversion from mode `from` into mode `to` (1-based), i.e. S(to, from).
inline std::complex<double> conversion(const Matrix3c& S, int from, int to) {
    return S(to - 1, from - 1);
}

SweepResult sweep(const CirculatorConfig& config, double delta_min, double delta_max, int n_points);

}  // namespace qcap

#endif  // QCAP_CIRCULATOR_HPP
