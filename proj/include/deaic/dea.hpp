#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deaic/lp.hpp"

namespace deaic {

/// One decision-making unit: three inputs and the single sales output,
/// in the units the reference tables use.
struct Producer {
  std::string id;
  double electricity_mwh = 0.0;  // MWh
  double raw_materials = 0.0;    // 1e10 Rial
  double labor_hours = 0.0;      // 1e6 hours
  double sales_value = 0.0;      // 1e10 Rial
};

/// Ordered producer collection. Positions are stable: peer-weight vectors
/// returned by the efficiency routines align with this order.
class Dataset {
 public:
  /// Validates every producer (positive sales, non-negative inputs with at
  /// least one positive, finite values) and id uniqueness.
  explicit Dataset(std::vector<Producer> producers);

  const std::vector<Producer>& producers() const { return producers_; }
  std::size_t size() const { return producers_.size(); }
  const Producer& at(std::size_t index) const;
  std::optional<std::size_t> find(std::string_view id) const;

 private:
  std::vector<Producer> producers_;
};

struct EfficiencyResult {
  std::string producer_id;
  double z = 1.0;                 // feasible proportional output expansion
  double efficiency_index = 1.0;  // 1 / z, in (0, 1]
  std::vector<double> lambda;     // peer weights, one per producer
};

/// Output-oriented CCR program for one producer over variables
/// (z, lambda_1..lambda_n): maximize z such that some peer mix uses no more
/// of any input and delivers at least z times the producer's sales value;
/// z >= 1, lambda >= 0.
LinearProgram build_ccr_lp(const Dataset& dataset, std::size_t index);

/// Solves the CCR program. The program is always feasible (z = 1 with the
/// producer's own unit weight), so a non-optimal solver status is surfaced
/// as InternalError with the program attached for diagnosis.
EfficiencyResult efficiency(const Dataset& dataset, std::size_t index);

/// Efficiency for every producer, dataset order preserved.
std::vector<EfficiencyResult> efficiency_all(const Dataset& dataset);

}  // namespace deaic
