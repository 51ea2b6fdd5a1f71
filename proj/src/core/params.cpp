#include "core/params.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace duopoly {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

}  // namespace

void ModelParams::validate() const {
  require(std::isfinite(alpha) && alpha >= 0.5 && alpha <= 1.0,
          "alpha must lie in [0.5, 1], got " + std::to_string(alpha));
  require(std::isfinite(delta) && delta >= 0.0 && delta < 1.0,
          "delta must lie in [0, 1), got " + std::to_string(delta));
  require(std::isfinite(qa) && qa > 0.0, "qa must be positive");
  require(std::isfinite(qb) && qb > 0.0, "qb must be positive");
  require(std::isfinite(cs) && cs > 0.0, "cs must be positive");
  require(std::isfinite(cq) && cq > 0.0, "cq must be positive");
  require(std::isfinite(budget_a) && budget_a >= 0.0,
          "budget_a must be nonnegative");
  require(std::isfinite(budget_b) && budget_b >= 0.0,
          "budget_b must be nonnegative");
}

}  // namespace duopoly
