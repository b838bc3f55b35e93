#pragma once

#include "gdof/channel.hpp"
#include "gdof/rational.hpp"
#include "gdof/types.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gdof::sim {

[[nodiscard]] inline double rho_power(double rho, const Rational& alpha) {
  return std::pow(rho, to_double(alpha));
}

/// Input covariances of the layered scheme for one user. The private part
/// inverts the cross link so its signal reaches the other receiver at the
/// noise floor; the common part is the complement up to uniform full power.
struct HkCovariances {
  CMatrix private_cov;  // (1/tx) (I + rho_cross cross^H cross)^-1
  CMatrix common_cov;   // I/tx minus the private part
};

/// `cross` is the channel this user's signal takes to the unintended
/// receiver, `rho_cross` that link's power, `tx` the user's antenna count.
[[nodiscard]] inline HkCovariances hk_covariances(const CMatrix& cross,
                                                  double rho_cross, int tx) {
  if (cross.cols() != tx)
    throw std::invalid_argument("cross link has wrong number of transmit antennas");
  const CMatrix eye = CMatrix::Identity(tx, tx);
  CMatrix gram = eye + rho_cross * cross.adjoint() * cross;
  CMatrix priv = gram.inverse() / static_cast<double>(tx);
  priv = (priv + priv.adjoint()) / 2.0;
  CMatrix common = eye / static_cast<double>(tx) - priv;
  common = (common + common.adjoint()) / 2.0;
  return {std::move(priv), std::move(common)};
}

/// Covariances for `user` (1 or 2) of the given channel draw at nominal
/// power rho.
[[nodiscard]] inline HkCovariances hk_covariances(const ChannelInstance& ch,
                                                  const ExponentProfile& exp,
                                                  double rho, int user) {
  if (user == 1)
    return hk_covariances(ch.h12, rho_power(rho, exp.cross12),
                          static_cast<int>(ch.h12.cols()));
  if (user == 2)
    return hk_covariances(ch.h21, rho_power(rho, exp.cross21),
                          static_cast<int>(ch.h21.cols()));
  throw std::invalid_argument("user must be 1 or 2");
}

/// The same covariances expressed per transmit beam: right singular vectors
/// of the cross link, with per-beam stream powers. Beams past the cross
/// link's rank lie in its null space and carry private power 1/tx.
struct BeamDecomposition {
  CMatrix directions;                  // tx x tx unitary, columns are beams
  std::vector<double> r_values;        // tx*(1 + rho_cross*lambda_k), k < rank
  std::vector<double> private_powers;  // per beam, length tx
  std::vector<double> common_powers;   // per beam, length rank
};

[[nodiscard]] inline BeamDecomposition beam_decomposition(const CMatrix& cross,
                                                          double rho_cross,
                                                          int tx) {
  if (cross.cols() != tx)
    throw std::invalid_argument("cross link has wrong number of transmit antennas");
  const int rank = static_cast<int>(std::min(cross.rows(), cross.cols()));
  Eigen::JacobiSVD<CMatrix> svd(cross, Eigen::ComputeFullV);
  BeamDecomposition out;
  out.directions = svd.matrixV();
  for (int k = 0; k < rank; ++k) {
    double lambda = svd.singularValues()(k) * svd.singularValues()(k);
    double r = tx * (1.0 + rho_cross * lambda);
    out.r_values.push_back(r);
    out.private_powers.push_back(1.0 / r);
    out.common_powers.push_back(1.0 / tx - 1.0 / r);
  }
  for (int k = rank; k < tx; ++k) out.private_powers.push_back(1.0 / tx);
  return out;
}

[[nodiscard]] inline BeamDecomposition beam_decomposition(const ChannelInstance& ch,
                                                          const ExponentProfile& exp,
                                                          double rho, int user) {
  if (user == 1)
    return beam_decomposition(ch.h12, rho_power(rho, exp.cross12),
                              static_cast<int>(ch.h12.cols()));
  if (user == 2)
    return beam_decomposition(ch.h21, rho_power(rho, exp.cross21),
                              static_cast<int>(ch.h21.cols()));
  throw std::invalid_argument("user must be 1 or 2");
}

/// The seven log-det upper bounds (bits) at finite rho, ordered to match the
/// region half-spaces: single-user 1 and 2, the three rate-sum bounds, then
/// the two weighted sums. Their rho-slopes are what the region's right-hand
/// sides predict.
[[nodiscard]] inline std::array<double, 7> outer_bound_values(
    const ChannelInstance& ch, const ExponentProfile& exp, double rho) {
  const double p11 = rho_power(rho, exp.direct1);
  const double p12 = rho_power(rho, exp.cross12);
  const double p21 = rho_power(rho, exp.cross21);
  const double p22 = rho_power(rho, exp.direct2);
  const int tx1 = static_cast<int>(ch.h11.cols());
  const int tx2 = static_cast<int>(ch.h22.cols());

  // Scaled private covariances: the cross-link inverses at full power.
  const CMatrix k1 = (CMatrix::Identity(tx1, tx1) +
                      p12 * ch.h12.adjoint() * ch.h12).inverse();
  const CMatrix k2 = (CMatrix::Identity(tx2, tx2) +
                      p21 * ch.h21.adjoint() * ch.h21).inverse();

  const auto L = [](const CMatrix& a) { return logdet_identity_plus(a); };
  const CMatrix rx1_full = p21 * ch.h21 * ch.h21.adjoint() +
                           p11 * ch.h11 * ch.h11.adjoint();
  const CMatrix rx2_full = p12 * ch.h12 * ch.h12.adjoint() +
                           p22 * ch.h22 * ch.h22.adjoint();
  const CMatrix rx1_priv = p11 * ch.h11 * k1 * ch.h11.adjoint();
  const CMatrix rx2_priv = p22 * ch.h22 * k2 * ch.h22.adjoint();
  const CMatrix rx1_mixed = p21 * ch.h21 * ch.h21.adjoint() + rx1_priv;
  const CMatrix rx2_mixed = p12 * ch.h12 * ch.h12.adjoint() + rx2_priv;

  std::array<double, 7> b{};
  b[0] = L(p11 * ch.h11 * ch.h11.adjoint());
  b[1] = L(p22 * ch.h22 * ch.h22.adjoint());
  b[2] = L(rx2_full) + L(rx1_priv);
  b[3] = L(rx1_full) + L(rx2_priv);
  b[4] = L(rx1_mixed) + L(rx2_mixed);
  b[5] = L(rx1_full) + L(rx1_priv) + L(rx2_mixed);
  b[6] = L(rx2_full) + L(rx2_priv) + L(rx1_mixed);
  return b;
}

/// What the layered scheme achieves: the same seven expressions shifted down
/// by rho-independent penalties (per-receiver constants times how often each
/// rate enters the bound), clamped at zero. Slopes are unaffected, which is
/// the point.
[[nodiscard]] inline std::array<double, 7> achievable_bound_values(
    const ChannelInstance& ch, const ExponentProfile& exp, double rho,
    double n1, double n2) {
  if (n1 < 0 || n2 < 0)
    throw std::invalid_argument("per-receiver penalties must be nonnegative");
  const std::array<double, 7> gap{n1, n2, n1 + n2, n1 + n2, n1 + n2,
                                  2 * n1 + n2, n1 + 2 * n2};
  auto b = outer_bound_values(ch, exp, rho);
  for (size_t i = 0; i < b.size(); ++i) b[i] = std::max(b[i] - gap[i], 0.0);
  return b;
}

[[nodiscard]] inline std::array<double, 7> achievable_bound_values(
    const ChannelInstance& ch, const ExponentProfile& exp, double rho) {
  const int tx_max = static_cast<int>(std::max(ch.h11.cols(), ch.h22.cols()));
  const double n1 = ch.h11.rows() * std::log2(static_cast<double>(tx_max));
  const double n2 = ch.h22.rows() * std::log2(static_cast<double>(tx_max));
  return achievable_bound_values(ch, exp, rho, n1, n2);
}

/// Per-user rates (bits) when each receiver lumps the other user's signal
/// into the noise.
[[nodiscard]] inline std::pair<double, double> tin_rates(const ChannelInstance& ch,
                                                         const ExponentProfile& exp,
                                                         double rho) {
  const double p11 = rho_power(rho, exp.direct1);
  const double p12 = rho_power(rho, exp.cross12);
  const double p21 = rho_power(rho, exp.cross21);
  const double p22 = rho_power(rho, exp.direct2);
  const auto rate = [](const CMatrix& direct, const CMatrix& interference,
                       double p_direct, double p_inter) {
    const int rx = static_cast<int>(direct.rows());
    CMatrix noise = CMatrix::Identity(rx, rx) +
                    p_inter * interference * interference.adjoint();
    CMatrix a = p_direct * direct.adjoint() * noise.inverse() * direct;
    return logdet_identity_plus(a);
  };
  return {rate(ch.h11, ch.h21, p11, p21), rate(ch.h22, ch.h12, p22, p12)};
}

}  // namespace gdof::sim
