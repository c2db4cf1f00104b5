#pragma once

#include <string>

#include "lognet/network.hpp"

namespace lognet {

/// JSON snapshot of the whole network. Stable field order, arrays sorted by
/// id, two-space indent, trailing newline; equal networks serialize to equal
/// bytes.
std::string serialize(const Network& net);

/// Inverse of serialize. Rejects malformed documents, unknown versions,
/// duplicate ids and dangling references; fresh links added afterwards get
/// ids above everything in the file.
Network deserialize(const std::string& text);

}  // namespace lognet
