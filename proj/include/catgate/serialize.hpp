#pragma once

#include <string>
#include <vector>

#include "catgate/config.hpp"
#include "catgate/experiment.hpp"

namespace catgate {

/// Shortest text form that round-trips a double (up to 17 significant digits).
std::string format_full(double v);

/// Sweep rows as CSV, exact column order:
/// tier,theta_rad,phi_rad,alpha,kappa_inv_us,fidelity,t1_us,t2_us,
/// trace_drift,leakage_ef,runtime_s,status
std::string sweep_csv(const std::vector<SweepRecord>& records);

/// JSON mirror of the sweep CSV (same field names) plus blue-red gaps.
std::string sweep_json(const std::vector<SweepRecord>& records);

std::string truth_table_csv(const std::array<TruthTableRow, 4>& rows, ModelTier tier);

std::string trajectory_csv(const TrajectorySink& sink);

/// Run manifest: config snapshot, derived-parameter table, integrator
/// settings, tool version and per-cell runtimes.
std::string manifest_json(const Config& config, const DerivedParams& derived,
                          const std::vector<SweepRecord>& records);

/// Writes `text` to `path` and the manifest alongside it (same stem with
/// .manifest.json).
void write_with_manifest(const std::string& path, const std::string& text,
                         const std::string& manifest);

/// Human-readable derived-parameter table for the derive command.
std::string derived_table(const DerivedParams& d);

/// Human-readable regime report for the validate command.
std::string regime_table(const RegimeReport& report);

} // namespace catgate
