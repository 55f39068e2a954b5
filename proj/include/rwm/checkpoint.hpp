#pragma once

#include <filesystem>
#include <utility>

#include "rwm/net.hpp"
#include "rwm/projector.hpp"

namespace rwm {

// Binary container ("RWMC"): network layers, attention head and projector
// snapshot, all dimensions as u32 headers and values as little-endian
// 64-bit floats. Round-trips bitwise.
void save_checkpoint(const std::filesystem::path& path, const Network& net,
                     const ProjectorState& projector);
std::pair<Network, ProjectorState> load_checkpoint(const std::filesystem::path& path);

} // namespace rwm
