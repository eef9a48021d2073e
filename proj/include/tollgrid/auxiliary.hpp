#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "tollgrid/delay.hpp"
#include "tollgrid/eq_solver.hpp"
#include "tollgrid/flow.hpp"
#include "tollgrid/network.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/pricing.hpp"
#include "tollgrid/util.hpp"

namespace tollgrid {

/// Companion game of a capacity-homogeneous network: autonomous demand is
/// scaled by mu and every link behaves as if it had the human-only capacity
/// for both classes (delay a + gamma*((fh+fa)/m)^beta).  Under the flow map
/// below it reproduces the original game's delays and costs exactly, but its
/// link costs depend on class flows only through their sum, which is what
/// makes equilibrium uniqueness arguments go through.
struct AuxiliaryGame {
  Network net;  // transformed copy; same topology and link order as the base
  double mu = 1.0;
  PriceVector tau;                 // tolls carried over unchanged
  std::uint64_t base_price_hash = 0;
};

inline AuxiliaryGame build_auxiliary(const Network& base, const PriceVector& tau) {
  if (!base.is_homogeneous())
    throw Error("auxiliary game requires a capacity-homogeneous network");
  validate_prices(base, tau);
  const double mu = base.mean_mu();
  std::vector<Link> links = base.links();
  for (auto& l : links) l.M = l.m;
  std::vector<OdPair> ods = base.od_pairs();
  for (auto& w : ods) w.demand_a *= mu;
  return AuxiliaryGame{Network(base.nodes(), links, ods), mu, tau, price_hash(tau)};
}

/// Flow transport into the auxiliary game: human flows unchanged, autonomous
/// flows scaled by mu.  Feasible for the auxiliary demands by construction.
inline PathFlow map_to_auxiliary(const PathFlow& f, double mu) {
  PathFlow out = f;
  for (auto& v : out.a) v *= mu;
  return out;
}

enum class CertificateStatus { Pass, Fail, Inapplicable, Rejected };

inline const char* to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Pass: return "PASS";
    case CertificateStatus::Fail: return "FAIL";
    case CertificateStatus::Inapplicable: return "INAPPLICABLE";
    case CertificateStatus::Rejected: return "REJECTED";
  }
  return "?";
}

struct CertifyTols {
  double aux_gap = 1e-5;          // normalized auxiliary-game gap per equilibrium
  double flow_spread = 1e-4;      // per-link spread of fh + mu*fa across equilibria
  double social_rel = 1e-3;       // relative spread of social delays
  double decomposition_rel = 1e-9;  // cost identity C = J + sum tau_h*(fh+mu*fa)
};

/// Evidence-based certificate that tolls computed at a social optimum pin
/// down the social delay: every converged equilibrium, transported into the
/// auxiliary game, must still be an equilibrium there; the combined link
/// flows fh + mu*fa must agree across equilibria; and the social delays must
/// agree.  FAIL is a finding about the inputs, not an exception.
struct CertificateReport {
  CertificateStatus status = CertificateStatus::Fail;
  double mu = 0.0;
  int num_checked = 0;              // converged equilibria entering the checks
  double max_aux_gap = 0.0;         // worst normalized gap after transport
  double max_flow_spread = 0.0;     // worst per-link spread of fh + mu*fa
  double social_spread = 0.0;       // absolute spread of social delays
  double social_spread_rel = 0.0;
  double max_decomposition_err = 0.0;
  std::string detail;
};

inline CertificateReport certify_social_delay_uniqueness(
    const Network& net, const PathSet& paths, const PriceVector& tau,
    const std::vector<EquilibriumResult>& equilibria, const CertifyTols& tols = {}) {
  CertificateReport rep;
  if (!net.is_homogeneous()) {
    rep.status = CertificateStatus::Inapplicable;
    rep.detail = "network is not capacity-homogeneous";
    return rep;
  }
  const std::uint64_t expect = price_hash(tau);
  for (const auto& eq : equilibria) {
    if (eq.price_hash != expect) {
      rep.status = CertificateStatus::Rejected;
      rep.detail = "equilibria were solved under different tolls than supplied";
      return rep;
    }
  }
  const PriceStructureReport structure = check_price_structure(net, tau, 1e-6);
  if (!structure.pass) {
    rep.status = CertificateStatus::Rejected;
    rep.detail = "tolls lack the homogeneous structure tau_a = mu * tau_h";
    return rep;
  }

  const AuxiliaryGame aux = build_auxiliary(net, tau);
  rep.mu = aux.mu;

  double j_lo = std::numeric_limits<double>::infinity();
  double j_hi = -j_lo;
  std::vector<double> comb_lo(net.num_links(), j_lo), comb_hi(net.num_links(), -j_lo);
  for (const auto& eq : equilibria) {
    if (!eq.converged) continue;
    ++rep.num_checked;

    const PathFlow mapped = map_to_auxiliary(eq.flow, aux.mu);
    rep.max_aux_gap = std::max(
        rep.max_aux_gap, detail::gap_eval(aux.net, paths, mapped, tau).normalized);

    const LinkFlow lf = aggregate(net, paths, eq.flow);
    double priced = 0.0;
    for (std::size_t l = 0; l < net.num_links(); ++l) {
      const double comb = lf.h[l] + aux.mu * lf.a[l];
      comb_lo[l] = std::min(comb_lo[l], comb);
      comb_hi[l] = std::max(comb_hi[l], comb);
      priced += tau.h[l] * comb;
    }
    const double rebuilt = eq.social_delay + priced;
    rep.max_decomposition_err =
        std::max(rep.max_decomposition_err,
                 std::abs(rebuilt - eq.total_cost) / std::max(1.0, std::abs(eq.total_cost)));

    j_lo = std::min(j_lo, eq.social_delay);
    j_hi = std::max(j_hi, eq.social_delay);
  }
  if (rep.num_checked == 0) {
    rep.status = CertificateStatus::Fail;
    rep.detail = "no converged equilibria to certify";
    return rep;
  }
  for (std::size_t l = 0; l < net.num_links(); ++l)
    rep.max_flow_spread = std::max(rep.max_flow_spread, comb_hi[l] - comb_lo[l]);
  rep.social_spread = j_hi - j_lo;
  rep.social_spread_rel = rep.social_spread / std::max(std::abs(j_hi), 1e-300);

  const bool ok = rep.max_aux_gap <= tols.aux_gap && rep.max_flow_spread <= tols.flow_spread &&
                  rep.social_spread_rel <= tols.social_rel &&
                  rep.max_decomposition_err <= tols.decomposition_rel;
  rep.status = ok ? CertificateStatus::Pass : CertificateStatus::Fail;
  return rep;
}

}  // namespace tollgrid
