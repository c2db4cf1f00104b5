#pragma once

#include <string>

#include "lognet/network.hpp"

namespace lognet {

/// Graphviz picture of the network. Neurons are ellipses; each excitatory
/// link is drawn as a small junction point collecting its terminals and
/// pointing at its head; negative terminals are marked "-". Inhibitory links
/// attach to the junction of the link they block with a dashed tee-headed
/// edge (multi-terminal ones get a junction of their own).
std::string to_dot(const Network& net);

}  // namespace lognet
