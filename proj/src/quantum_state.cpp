#include "hyperqm/quantum_state.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace hyperqm {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenvalueTol = 1e-10;

Matrix4c projector(const Vector4c& ket) { return ket * ket.adjoint(); }

}  // namespace

void validate_state(const TwoQubitState& state) {
  const Matrix4c& m = state.matrix;
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::domain_error("state is not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > kTraceTol ||
      std::abs(m.trace().imag()) > kTraceTol)
    throw std::domain_error("state does not have unit trace");
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(m);
  if (solver.eigenvalues().minCoeff() < -kEigenvalueTol)
    throw std::domain_error("state is not positive semidefinite");
}

TwoQubitState make_state(const Matrix4c& matrix, PairBasis basis) {
  TwoQubitState state{matrix, basis};
  validate_state(state);
  return state;
}

double purity(const TwoQubitState& state) {
  return (state.matrix * state.matrix).trace().real();
}

double state_overlap(const TwoQubitState& a, const TwoQubitState& b) {
  if (a.basis != b.basis)
    throw std::invalid_argument("state_overlap: basis mismatch");
  return (a.matrix * b.matrix).trace().real();
}

TwoQubitState bell_polarization(double theta) {
  if (!std::isfinite(theta))
    throw std::domain_error("bell_polarization: theta must be finite");
  Vector4c ket = Vector4c::Zero();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ket(0) = inv_sqrt2;                                     // |HH>
  ket(3) = std::polar(inv_sqrt2, theta);                  // e^{i theta} |VV>
  return make_state(projector(ket), PairBasis::polarization);
}

TwoQubitState bell_timebin() {
  Vector4c ket = Vector4c::Zero();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ket(0) = inv_sqrt2;  // |SS>
  ket(3) = inv_sqrt2;  // |LL>
  return make_state(projector(ket), PairBasis::timebin);
}

TwoQubitState werner(const TwoQubitState& bell, double visibility) {
  if (purity(bell) < 1.0 - 1e-9)
    throw std::domain_error("werner: input state must be pure");
  if (!(visibility >= 0.0 && visibility <= 1.0))
    throw std::domain_error("werner: visibility must be in [0, 1]");
  const Matrix4c mixed =
      visibility * bell.matrix +
      (1.0 - visibility) * 0.25 * Matrix4c::Identity();
  return make_state(mixed, bell.basis);
}

double expectation(const TwoQubitState& rho, const MeasurementOperator& op) {
  if (rho.basis != op.basis)
    throw std::invalid_argument("expectation: operator and state basis differ");
  const Complex tr = (rho.matrix * op.matrix).trace();
  if (std::abs(tr.imag()) > 1e-10)
    throw std::domain_error("expectation: trace has a non-negligible imaginary part");
  return std::clamp(tr.real(), 0.0, 1.0);
}

Vector2c polarization_ket(double hwp_angle, int k, double v_phase) {
  const double angle = 2.0 * hwp_angle;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Complex phase = std::polar(1.0, v_phase);
  Vector2c ket;
  if (k == 1) {
    ket << c, phase * s;
  } else if (k == 2) {
    ket << s, -phase * c;
  } else {
    throw std::invalid_argument("polarization_ket: detector must be 1 or 2");
  }
  return ket;
}

Vector2c timebin_ket(double phase, int m) {
  if (m != 1 && m != 2)
    throw std::invalid_argument("timebin_ket: outcome must be 1 or 2");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Vector2c ket;
  ket << inv_sqrt2, std::polar(inv_sqrt2, phase + (m - 1) * 3.14159265358979323846);
  return ket;
}

Matrix4c kron2(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

std::array<MeasurementOperator, 4> measurement_operators(
    const AnalyzerPairSettings& settings) {
  std::array<MeasurementOperator, 4> ops;
  std::size_t idx = 0;
  for (int k = 1; k <= 2; ++k) {
    for (int l = 1; l <= 2; ++l) {
      Vector2c signal_ket, idler_ket;
      if (settings.dof == PairBasis::polarization) {
        signal_ket = polarization_ket(settings.signal, k,
                                      settings.signal_phase_compensation);
        idler_ket = polarization_ket(settings.idler, l);
      } else {
        signal_ket = timebin_ket(settings.signal, k);
        idler_ket = timebin_ket(settings.idler, l);
      }
      const Matrix2c ps = signal_ket * signal_ket.adjoint();
      const Matrix2c pi = idler_ket * idler_ket.adjoint();
      ops[idx++] = MeasurementOperator{kron2(ps, pi), {k, l}, settings.dof};
    }
  }
  return ops;
}

double correlation_e(const TwoQubitState& rho,
                     const AnalyzerPairSettings& settings) {
  const auto ops = measurement_operators(settings);
  double e = 0.0;
  for (const auto& op : ops) {
    const double sign = (op.outcome.first == op.outcome.second) ? 1.0 : -1.0;
    e += sign * expectation(rho, op);
  }
  return e;
}

}  // namespace hyperqm
