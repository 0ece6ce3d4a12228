#pragma once

#include <string>

#include "nematic2d/flow_state.hpp"
#include "nematic2d/kinematics.hpp"

namespace nematic2d {

/// On-disk state: magic "NEM2DV01", u64 little-endian n, f64 L, f64 t,
/// u8 mode flag (0 projection, 1 Ginzburg-Landau), then 2 n^2 f64 for u and
/// 3 n^2 f64 for d, row-major per component, all little-endian. Round trips
/// are bit-exact.
struct Snapshot {
  FlowState state;
  DirectorMode mode = DirectorMode::projection;
};

void write_snapshot(const FlowState& state, DirectorMode mode, const std::string& path);
Snapshot read_snapshot(const std::string& path);

}  // namespace nematic2d
