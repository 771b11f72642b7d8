#include "fos/node_set.hpp"

namespace fos {

std::vector<NodeId> NodeSet::members() const {
  std::vector<NodeId> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (NodeId v : members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace fos
