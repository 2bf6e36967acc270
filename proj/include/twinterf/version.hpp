#pragma once

namespace twinterf {

inline constexpr const char* kEngineVersion = "0.1.0";

/// Version of the CSV/JSON output schema. Bumped on any change to emitted
/// columns or JSON layout so downstream tooling can detect drift.
inline constexpr int kOutputSchemaVersion = 1;

}  // namespace twinterf
