#ifndef BCINV_REPORT_IO_HPP
#define BCINV_REPORT_IO_HPP

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcinv/analysis.hpp"

namespace bcinv {

using Json = nlohmann::ordered_json;

inline Json to_json(const ExistenceReport& rep) {
  Json j;
  j["left"] = rep.left;
  j["right"] = rep.right;
  j["two_sided"] = rep.two_sided;
  j["unique_onesided"] = rep.unique_onesided;
  j["rk_D"] = rep.rk_D;
  j["rk_E"] = rep.rk_E;
  j["rk_EAD"] = rep.rk_EAD;
  j["rk_AD"] = rep.rk_AD;
  j["rk_EA"] = rep.rk_EA;
  j["margin"] = rep.margin;  // non-finite serializes as null
  return j;
}

inline Json to_json(const Residuals& res) {
  Json j;
  j["xad_d"] = res.xad_d;
  j["eax_e"] = res.eax_e;
  j["range_gap"] = res.range_gap;
  j["kernel_gap"] = res.kernel_gap;
  return j;
}

inline Json to_json(const InverseResult& result) {
  Json j;
  j["method"] = method_name(result.method);
  j["r"] = result.r;
  j["residuals"] = to_json(result.residuals);
  return j;
}

inline Json to_json(const ProjectorReport& rep) {
  Json j;
  j["xa_idempotent"] = rep.xa_idempotent;
  j["ax_idempotent"] = rep.ax_idempotent;
  j["range_xa_eq_RD"] = rep.range_xa_eq_RD;
  j["kernel_ax_eq_KE"] = rep.kernel_ax_eq_KE;
  j["kernel_xa_eq_KEA"] = rep.kernel_xa_eq_KEA;
  j["range_ax_eq_RAD"] = rep.range_ax_eq_RAD;
  j["ax_orthogonal"] = rep.ax_orthogonal;
  j["xa_orthogonal"] = rep.xa_orthogonal;
  j["inner"] = rep.inner;
  j["outer_residual"] = rep.outer_residual;
  j["inner_residual"] = rep.inner_residual;
  return j;
}

inline std::string csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string to_csv(const std::vector<PerturbRow>& rows) {
  std::string out = "delta_or_eps,error,existed\n";
  for (const auto& row : rows) {
    out += csv_double(row.delta);
    out += ',';
    out += row.existed ? csv_double(row.error) : "";
    out += ',';
    out += row.existed ? "1" : "0";
    out += '\n';
  }
  return out;
}

inline std::string to_csv(const std::vector<LimitRow>& rows) {
  std::string out = "delta_or_eps,error,existed\n";
  for (const auto& row : rows) {
    out += csv_double(row.eps);
    out += ',';
    out += row.ok ? csv_double(row.error) : "";
    out += ',';
    out += row.ok ? "1" : "0";
    out += '\n';
  }
  return out;
}

inline Json to_json(const std::vector<PerturbRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["delta"] = row.delta;
    j["error"] = row.error;
    j["existed"] = row.existed;
    j["decomposition_residual"] = row.decomposition_residual;
    arr.push_back(j);
  }
  return arr;
}

inline Json to_json(const std::vector<LimitRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["eps"] = row.eps;
    j["error"] = row.error;
    j["existed"] = row.ok;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace bcinv

#endif
