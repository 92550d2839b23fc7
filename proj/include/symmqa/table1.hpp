// Copyright 2026 The symmqa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <vector>

namespace symmqa {

/// Fixed random-XXZ coupling constants (GHz) used by the reproduction
/// presets; data/table1_couplings.json carries the same values.
inline constexpr std::array<double, 4> kXxzReferenceCouplings = {
    0.8441683664299817,
    0.47574391516586223,
    0.06980280523824778,
    0.6197240483819366,
};

/// First `count` reference couplings as a vector (count = 3 gives the
/// 4-site chain, count = 4 the 5-site variant).
inline std::vector<double> xxz_reference_couplings(int count = 3) {
    return {kXxzReferenceCouplings.begin(), kXxzReferenceCouplings.begin() + count};
}

}  // namespace symmqa
