#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <utility>

namespace hyperqm {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector2c = Eigen::Vector2cd;
using Vector4c = Eigen::Vector4cd;

/// Basis labels of a two-qubit pair state. Basis order is fixed:
/// polarization {HH, HV, VH, VV}, timebin {SS, SL, LS, LL}, with the
/// signal photon in the first slot.
enum class PairBasis { polarization, timebin };

/// Density matrix for one degree of freedom of a photon pair.
/// Valid states are Hermitian, unit-trace and positive semidefinite;
/// constructors validate and throw std::domain_error on violations.
struct TwoQubitState {
  Matrix4c matrix;
  PairBasis basis;
};

/// Product hyperentangled state: one two-qubit state per degree of freedom.
struct HyperState {
  TwoQubitState polarization;
  TwoQubitState timebin;
};

/// One outcome operator of a four-outcome pair measurement.
struct MeasurementOperator {
  Matrix4c matrix;
  std::pair<int, int> outcome;  // (k, l), detectors 1 or 2 on each side
  PairBasis basis;
};

/// Analyzer settings for both sides of a single degree of freedom.
/// For polarization the values are HWP angles (QWP at 0, linear analysis);
/// for timebin they are interferometer phases. `signal_phase_compensation`
/// adds a fixed phase on the |V> component of the signal analyzer ket,
/// the simulator's model of the QWP-based offset compensation.
struct AnalyzerPairSettings {
  PairBasis dof;
  double signal;
  double idler;
  double signal_phase_compensation = 0.0;
};

void validate_state(const TwoQubitState& state);
TwoQubitState make_state(const Matrix4c& matrix, PairBasis basis);

double purity(const TwoQubitState& state);

/// tr(rho sigma); equals |<psi|phi>|^2 when both states are pure.
double state_overlap(const TwoQubitState& a, const TwoQubitState& b);

/// (|HH> + e^{i theta} |VV>) / sqrt(2) as a density matrix.
TwoQubitState bell_polarization(double theta);

/// (|SS> + |LL>) / sqrt(2) as a density matrix.
TwoQubitState bell_timebin();

/// V * bell + (1 - V) * I/4. `bell` must be pure.
TwoQubitState werner(const TwoQubitState& bell, double visibility);

/// tr(rho M), real and clamped to [0, 1].
double expectation(const TwoQubitState& rho, const MeasurementOperator& op);

/// The four outcome operators of the pair measurement described by the
/// settings. They sum to identity.
std::array<MeasurementOperator, 4> measurement_operators(
    const AnalyzerPairSettings& settings);

/// Expectation of the +/-1-valued joint observable (outcomes (1,1) and
/// (2,2) count +1, mixed outcomes -1), computed from the outcome POVM.
double correlation_e(const TwoQubitState& rho,
                     const AnalyzerPairSettings& settings);

/// Analyzer ket of detector `k` (1 or 2) for one side of a polarization
/// measurement: linear analysis at twice the HWP angle, with an optional
/// phase on the |V> component.
Vector2c polarization_ket(double hwp_angle, int k, double v_phase = 0.0);

/// Analyzer ket of outcome `m` for one side of a time-bin measurement:
/// (|S> + e^{i(phase + (m-1) pi)} |L>) / sqrt(2).
Vector2c timebin_ket(double phase, int m);

Matrix4c kron2(const Matrix2c& a, const Matrix2c& b);

}  // namespace hyperqm
