#include "riesz/report.hpp"

#include <cmath>
#include <fstream>
#include <system_error>

#include "riesz/errors.hpp"

namespace riesz {

Json finite_or_tag(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "+inf" : "-inf";
  return value;
}

Json to_json(const KernelSpec& spec) {
  return {{"case", std::string(to_string(spec.kind))},
          {"d", spec.d},
          {"s", spec.s},
          {"k", spec.k},
          {"gamma", spec.gamma},
          {"c_ds", spec.c_ds},
          {"alpha", spec.alpha}};
}

Json to_json(const EquilibriumModel& model) {
  Json support = model.d == 1 ? Json{{"kind", "interval"},
                                     {"lower", -model.support_radius},
                                     {"upper", model.support_radius}}
                              : Json{{"kind", "disk"}, {"radius", model.support_radius}};
  return {{"name", model.name},   {"kernel", to_json(model.spec)}, {"robin_c", model.robin_c},
          {"energy_E", model.energy_E}, {"m_bar", model.m_bar},         {"support", support}};
}

Json to_json(const Configuration& config) {
  Json points = Json::array();
  for (std::size_t i = 0; i < config.size(); ++i) {
    const auto p = config.point(i);
    if (config.d == 1) {
      points.push_back(p[0]);
    } else {
      points.push_back(Json(std::vector<double>(p.begin(), p.end())));
    }
  }
  return points;
}

Json to_json(const SplitReport& rep) {
  return {{"H", finite_or_tag(rep.H)},
          {"mean_field", rep.mean_field},
          {"zeta_term", rep.zeta_term},
          {"log_correction", rep.log_correction},
          {"next_order_direct", finite_or_tag(rep.next_order_direct)},
          {"next_order_potential_route", finite_or_tag(rep.next_order_potential_route)},
          {"route_gap", finite_or_tag(rep.route_gap)}};
}

Json to_json(const SeparationReport& rep) {
  return {{"min_spacing", finite_or_tag(rep.min_spacing)},
          {"scaled_spacing", finite_or_tag(rep.scaled_spacing)},
          {"max_zeta", rep.max_zeta},
          {"all_in_support", rep.all_in_support}};
}

Json to_json(const MinimizeResult& res) {
  return {{"points", to_json(res.config)},
          {"value", finite_or_tag(res.value)},
          {"iterations", res.iterations},
          {"converged", res.converged},
          {"line_search_failed", res.line_search_failed},
          {"gradient_norm", res.gradient_norm}};
}

Json to_json(const FitResult& fit) {
  return {{"E_hat", fit.E_hat},
          {"next_order_hat", fit.next_order_hat},
          {"coefficients", fit.coefficients},
          {"residuals", fit.residuals}};
}

Json to_json(const LatticeEnergyReport& rep) {
  Json j = {{"W_value", finite_or_tag(rep.W_value)},
            {"pair_term", finite_or_tag(rep.pair_term)},
            {"self_term", rep.self_term}};
  j["eta"] = rep.eta ? Json(*rep.eta) : Json(nullptr);
  j["xi"] = rep.xi ? finite_or_tag(*rep.xi) : Json(nullptr);
  return j;
}

Json to_json(const SamplerStats& stats) {
  return {{"steps", stats.steps},
          {"acceptance_rate", stats.acceptance_rate},
          {"proposal_sigma", stats.proposal_sigma},
          {"w1_to_equilibrium", stats.w1_to_equilibrium},
          {"w1_pooled", stats.w1_pooled},
          {"mean_next_order", stats.mean_next_order},
          {"max_audit_error", stats.max_audit_error},
          {"records", stats.energy_trace.size()}};
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << text;
    if (!out.flush()) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into place at " + path.string() + ": " +
                             ec.message());
  }
}

}  // namespace riesz
