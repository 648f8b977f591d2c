// SPDX-License-Identifier: Apache-2.0
//
// JSON serialization of profiles. The schema is documented in
// docs/config.md; every SystemProfile field has a key of the same name.

#pragma once

#include <string>
#include <string_view>

#include "emfsim/exposure.hpp"
#include "emfsim/profiles.hpp"

namespace emfsim {

std::string profile_to_json(const SystemProfile& profile);

/// Parses a profile object. Keys that are absent keep the value from `base`,
/// so a file can override a single field of a built-in profile. Unknown keys
/// are rejected. When "generation" is present and differs from the base, the
/// built-in profile of that generation becomes the base.
SystemProfile profile_from_json(std::string_view json_text, const SystemProfile& base);
SystemProfile profile_from_json(std::string_view json_text);

std::string tissue_to_json(const TissueParams& tissue);
TissueParams tissue_from_json(std::string_view json_text, const TissueParams& base = {});

}  // namespace emfsim
