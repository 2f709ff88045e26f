#pragma once

#include <cstdint>
#include <vector>

#include "gems/target_model.hpp"

namespace gems {

// One recorded chain state, tagged for the reweighting estimators. `source`
// is the chain index for the equi-energy sampler and the temperature index
// for the multicanonical sampler; the estimators treat both the same way.
struct Sample {
  std::uint32_t source = 0;
  std::uint64_t step = 0;
  std::uint32_t ring = 0;
  Point x;
};

using SampleSet = std::vector<Sample>;

}  // namespace gems
