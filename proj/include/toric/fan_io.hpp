#pragma once
#include <string>

#include "toric/fan.hpp"

namespace toric {

/// Strict JSON fan format: {"rays": [[int,...],...], "max_cones": [[int,...],...]}
/// with 0-based ray indices. Floating-point numbers are rejected.
Fan fan_from_json(const std::string& text);
Fan fan_from_file(const std::string& path);
std::string fan_to_json(const Fan& fan);

/// {"coeffs": [int,...]} aligned with the fan's ray order.
DivisorClass divisor_from_json(const std::string& text, int ray_count);

}  // namespace toric
