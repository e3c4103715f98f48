#include "deaic/reference.hpp"

#include "deaic/io.hpp"

namespace deaic::reference {

std::string_view producers_csv() {
  return "id,electricity_mwh,raw_materials_e10_rial,labor_hours_e6,sales_e10_rial\n"
         "P1,3174,6.55,3.76,14.4\n"
         "P2,14904,52.8,17.27,83.11\n"
         "P3,6308,23,3.03,41.21\n"
         "P4,32364,294,24.37,471.01\n"
         "P5,10866,65.8,22.59,96.58\n"
         "P6,161913,602,104.64,968.72\n"
         "P7,3954,28.7,1.91,45.06\n"
         "P8,14346,6.81,3.94,22.45\n";
}

std::string_view distributions_csv() {
  return "producer_id,mean_mwh,std_mwh\n"
         "P1,3186,3\n"
         "P2,14932,7.5\n"
         "P3,6352,11\n"
         "P4,32450,10.5\n"
         "P5,11086,55\n"
         "P6,162403,97.5\n"
         "P7,3971,4.2\n"
         "P8,14455,27.2\n";
}

Dataset dataset() { return parse_producers(producers_csv()); }

std::vector<EnergyDistribution> distributions() {
  return parse_distributions(distributions_csv(), dataset());
}

const std::array<double, 8>& published_efficiency_indices() {
  static const std::array<double, 8> values = {1.0,     0.83914, 1.0, 1.0,
                                               0.86901, 0.89154, 1.0, 1.0};
  return values;
}

const std::array<double, 8>& published_costs_rial_per_kwh() {
  static const std::array<double, 8> values = {6704.818, 13378.31, 9603.08,
                                               13576.77, 13854.55, 11702,
                                               16446.59, 15645.68};
  return values;
}

}  // namespace deaic::reference
