#pragma once

#include <span>
#include <string>

#include "stagflow/diagnostics.hpp"
#include "stagflow/twophase.hpp"

namespace stagflow {

/// Shortest round-trippable decimal representation; keeps CSV output
/// byte-identical across runs.
std::string format_double(double v);

/// Columns: t, mean_u, min_dxu, max_dxu, c1_norm_u, uxx_norm, f_value, dt_u_sup
void write_diagnostics_csv(const std::string& path,
                           std::span<const DiagnosticsRecord> records);

/// Columns: t, p, q, phi, psi, alpha, int_p, int_q, N_residual,
/// partition_residual
void write_twophase_csv(const std::string& path,
                        std::span<const TwoPhaseRecord> records);

}  // namespace stagflow
