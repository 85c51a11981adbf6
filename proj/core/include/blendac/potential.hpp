#pragma once

#include <span>
#include <vector>

#include "blendac/types.hpp"

namespace blendac {

/// EAM toy potential: pair part phi(r) = e^{-2a(r-1)} - 2 e^{-a(r-1)},
/// electron density psi(r) = e^{-b r}, embedding
/// F(t) = C [ (t - rho0)^2 + (t - rho0)^4 ].
struct EAMParams {
  double a = 4.0;
  double b = 3.0;
  double C = 10.0;
  double rho0 = 6.0 * std::exp(-2.7);  // 6 e^{-0.9 b}

  void validate() const {
    if (a <= 0 || b <= 0 || C <= 0) throw Error("EAMParams: a, b, C must be positive");
  }
};

double pair_phi(const EAMParams& p, double r);
double pair_dphi(const EAMParams& p, double r);
double density_psi(const EAMParams& p, double r);
double density_dpsi(const EAMParams& p, double r);
double embed_F(const EAMParams& p, double t);
double embed_dF(const EAMParams& p, double t);

/// Site energy without the zero-point shift. Arguments are displacement
/// differences; the deformed bond is rho + du.
double site_energy_raw(const EAMParams& p, std::span<const Vec2> du,
                       std::span<const Vec2> rho);

/// Renormalized site energy: site_energy_raw(du) - site_energy_raw(0), so that
/// the undeformed stencil carries zero energy.
double site_energy(const EAMParams& p, std::span<const Vec2> du,
                   std::span<const Vec2> rho);

/// Analytic partials of the site energy with respect to each stencil entry.
/// grad must have the same length as rho.
void site_gradient(const EAMParams& p, std::span<const Vec2> du,
                   std::span<const Vec2> rho, std::span<Vec2> grad);

/// Cauchy-Born energy density of the homogeneous triangular lattice:
/// W(G) = det(A)^{-1} V(G R) with R the reference interaction stencil.
/// G is a displacement gradient (deformed bond = (I+G) rho).
class CauchyBorn {
 public:
  CauchyBorn(const EAMParams& p, const Mat2& cell, double r_cut);

  double density(const Mat2& grad) const;           // W(G), renormalized W(0)=0
  Mat2 density_gradient(const Mat2& grad) const;    // dW/dG, 2x2
  const std::vector<Vec2>& stencil() const { return stencil_; }
  double cell_volume() const { return det_; }
  const EAMParams& params() const { return params_; }

  /// Far-field predictor scale: t minimizing W((t-1) I) over [0.9, 1.1] by
  /// golden-section search to 1e-10.
  double equilibrium_scale() const;

 private:
  EAMParams params_;
  std::vector<Vec2> stencil_;
  double det_;
  double zero_point_;  // raw site energy of the undeformed stencil
  mutable std::vector<Vec2> scratch_du_, scratch_g_;
};

/// Second renormalization used by the BGFC method:
/// V''(Du) = V(Du) - <dV(0), Du>, W''(G) = W(G) - dW(0) : G.
class RenormalizedPair {
 public:
  explicit RenormalizedPair(const CauchyBorn& cb);

  /// V'' on an arbitrary stencil; dV(0) is recomputed for that stencil.
  double site_energy_renorm(const EAMParams& p, std::span<const Vec2> du,
                            std::span<const Vec2> rho) const;
  double density_renorm(const Mat2& grad) const;  // W''(G)

  const std::vector<Vec2>& dV0() const { return dV0_; }  // on the canonical stencil
  const Mat2& dW0() const { return dW0_; }

 private:
  const CauchyBorn* cb_;
  std::vector<Vec2> dV0_;
  Mat2 dW0_;
};

}  // namespace blendac
