#pragma once

#include <string>

#include "cutstack/gadget.hpp"

namespace cutstack {

// Lossless JSON serialization. Rationals are {"num": "<decimal>", "den": "<decimal>"}.
// Schema (version 1):
//   { "format": "cutstack-gadget", "version": 1,
//     "columns": [ { "levels": [ {"lo": R, "hi": R}, ... ],
//                    "provenance": [[src, height], ...] }, ... ] }
// "provenance" is omitted for columns without it.
std::string gadget_to_json(const Gadget& g, int indent = -1);
Gadget gadget_from_json(const std::string& text);

} // namespace cutstack
