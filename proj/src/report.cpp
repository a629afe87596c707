#include "chermite/report.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace chermite {

double identity_rel_err(std::complex<double> lhs, std::complex<double> rhs) {
  double abs_err = std::abs(lhs - rhs);
  return abs_err / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

void IdentityReport::finish(double tolerance) {
  abs_err = std::abs(lhs - rhs);
  rel_err = abs_err / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
  pass = rel_err <= tolerance;
}

std::string IdentityReport::to_json_line() const {
  using json = nlohmann::ordered_json;
  auto cplx = [](std::complex<double> c) {
    return json{{"re", c.real()}, {"im", c.imag()}};
  };
  json params_obj = json::object();
  for (const auto& [name, value] : params) params_obj[name] = cplx(value);
  json meta_obj = json::object();
  for (const auto& [key, value] : meta) meta_obj[key] = value;
  json line = {
      {"identity_id", identity_id},
      {"params", std::move(params_obj)},
      {"lhs", cplx(lhs)},
      {"rhs", cplx(rhs)},
      {"abs_err", abs_err},
      {"rel_err", rel_err},
      {"pass", pass},
      {"meta", std::move(meta_obj)},
  };
  return line.dump();
}

}  // namespace chermite
