#include "blendac/potential.hpp"

#include <algorithm>

namespace blendac {

double pair_phi(const EAMParams& p, double r) {
  return std::exp(-2.0 * p.a * (r - 1.0)) - 2.0 * std::exp(-p.a * (r - 1.0));
}

double pair_dphi(const EAMParams& p, double r) {
  return -2.0 * p.a * std::exp(-2.0 * p.a * (r - 1.0)) +
         2.0 * p.a * std::exp(-p.a * (r - 1.0));
}

double density_psi(const EAMParams& p, double r) { return std::exp(-p.b * r); }

double density_dpsi(const EAMParams& p, double r) {
  return -p.b * std::exp(-p.b * r);
}

double embed_F(const EAMParams& p, double t) {
  const double d = t - p.rho0;
  const double d2 = d * d;
  return p.C * (d2 + d2 * d2);
}

double embed_dF(const EAMParams& p, double t) {
  const double d = t - p.rho0;
  return p.C * (2.0 * d + 4.0 * d * d * d);
}

double site_energy_raw(const EAMParams& p, std::span<const Vec2> du,
                       std::span<const Vec2> rho) {
  if (du.size() != rho.size()) throw Error("site_energy: stencil size mismatch");
  double pair = 0.0, dens = 0.0;
  for (std::size_t k = 0; k < rho.size(); ++k) {
    const double r = (rho[k] + du[k]).norm();
    if (r < 1e-12) throw Error("site_energy: collapsed bond");
    pair += pair_phi(p, r);
    dens += density_psi(p, r);
  }
  return pair + embed_F(p, dens);
}

double site_energy(const EAMParams& p, std::span<const Vec2> du,
                   std::span<const Vec2> rho) {
  double pair0 = 0.0, dens0 = 0.0;
  for (const Vec2& r : rho) {
    const double rn = r.norm();
    pair0 += pair_phi(p, rn);
    dens0 += density_psi(p, rn);
  }
  return site_energy_raw(p, du, rho) - (pair0 + embed_F(p, dens0));
}

void site_gradient(const EAMParams& p, std::span<const Vec2> du,
                   std::span<const Vec2> rho, std::span<Vec2> grad) {
  if (du.size() != rho.size() || grad.size() != rho.size())
    throw Error("site_gradient: stencil size mismatch");
  double dens = 0.0;
  for (std::size_t k = 0; k < rho.size(); ++k) {
    const double r = (rho[k] + du[k]).norm();
    if (r < 1e-12) throw Error("site_gradient: collapsed bond");
    dens += density_psi(p, r);
  }
  const double dF = embed_dF(p, dens);
  for (std::size_t k = 0; k < rho.size(); ++k) {
    const Vec2 bond = rho[k] + du[k];
    const double r = bond.norm();
    const double scale = (pair_dphi(p, r) + dF * density_dpsi(p, r)) / r;
    grad[k] = scale * bond;
  }
}

CauchyBorn::CauchyBorn(const EAMParams& p, const Mat2& cell, double r_cut)
    : params_(p), det_(cell.determinant()) {
  params_.validate();
  if (det_ <= 0) throw Error("CauchyBorn: cell matrix must have positive determinant");
  if (r_cut < 1.0) throw Error("CauchyBorn: cutoff below nearest-neighbor distance");
  const int m = static_cast<int>(std::ceil(r_cut)) + 1;
  std::vector<std::pair<double, Vec2>> found;
  for (int z1 = -2 * m; z1 <= 2 * m; ++z1)
    for (int z2 = -2 * m; z2 <= 2 * m; ++z2) {
      const Vec2 x = cell * Vec2(z1, z2);
      const double r = x.norm();
      if (r > 1e-12 && r <= r_cut + 1e-12) found.emplace_back(r, x);
    }
  std::sort(found.begin(), found.end(), [](const auto& u, const auto& v) {
    if (u.first != v.first) return u.first < v.first;
    const double au = std::atan2(u.second[1], u.second[0]);
    const double av = std::atan2(v.second[1], v.second[0]);
    return au < av;
  });
  stencil_.reserve(found.size());
  for (const auto& [r, x] : found) stencil_.push_back(x);
  std::vector<Vec2> zero(stencil_.size(), Vec2::Zero());
  zero_point_ = site_energy_raw(params_, zero, stencil_);
  scratch_du_.resize(stencil_.size());
  scratch_g_.resize(stencil_.size());
}

double CauchyBorn::density(const Mat2& grad) const {
  for (std::size_t k = 0; k < stencil_.size(); ++k) scratch_du_[k] = grad * stencil_[k];
  for (std::size_t k = 0; k < stencil_.size(); ++k)
    if ((stencil_[k] + scratch_du_[k]).norm() < 1e-10)
      throw Error("cb_density: degenerate deformation");
  return (site_energy_raw(params_, scratch_du_, stencil_) - zero_point_) / det_;
}

Mat2 CauchyBorn::density_gradient(const Mat2& grad) const {
  for (std::size_t k = 0; k < stencil_.size(); ++k) scratch_du_[k] = grad * stencil_[k];
  site_gradient(params_, scratch_du_, stencil_, scratch_g_);
  Mat2 dw = Mat2::Zero();
  for (std::size_t k = 0; k < stencil_.size(); ++k)
    dw += scratch_g_[k] * stencil_[k].transpose();
  return dw / det_;
}

double CauchyBorn::equilibrium_scale() const {
  auto w = [this](double t) { return density((t - 1.0) * Mat2::Identity()); };
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.9, hi = 1.1;
  double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
  double f1 = w(x1), f2 = w(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - invphi * (hi - lo); f1 = w(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + invphi * (hi - lo); f2 = w(x2);
    }
  }
  return 0.5 * (lo + hi);
}

RenormalizedPair::RenormalizedPair(const CauchyBorn& cb) : cb_(&cb) {
  const auto& rho = cb.stencil();
  std::vector<Vec2> zero(rho.size(), Vec2::Zero());
  dV0_.resize(rho.size());
  site_gradient(cb.params(), zero, rho, dV0_);
  dW0_ = cb.density_gradient(Mat2::Zero());
}

double RenormalizedPair::site_energy_renorm(const EAMParams& p,
                                            std::span<const Vec2> du,
                                            std::span<const Vec2> rho) const {
  std::vector<Vec2> zero(rho.size(), Vec2::Zero());
  std::vector<Vec2> g0(rho.size());
  site_gradient(p, zero, rho, g0);
  double lin = 0.0;
  for (std::size_t k = 0; k < rho.size(); ++k) lin += g0[k].dot(du[k]);
  return site_energy(p, du, rho) - lin;
}

double RenormalizedPair::density_renorm(const Mat2& grad) const {
  return cb_->density(grad) - (dW0_.array() * grad.array()).sum();
}

}  // namespace blendac
