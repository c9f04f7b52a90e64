#pragma once

#include <array>
#include <cstddef>

namespace scatcm::detail {

struct LebedevPoint {
  double theta;
  double phi;
  double weight;
};

struct LebedevTable {
  std::size_t size;
  int degree;
  const LebedevPoint* points;
};

inline constexpr std::size_t kLebedevTableCount = 14;

extern const std::array<LebedevTable, kLebedevTableCount> kLebedevTables;

}  // namespace scatcm::detail
