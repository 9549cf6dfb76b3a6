#include "m0k/ground.hpp"

#include "m0k/errors.hpp"

namespace m0k {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 3) {
    throw ValidationError("ground set needs at least 3 labels, got " +
                          std::to_string(labels_.size()));
  }
  if (labels_.size() > 32) {
    throw ValidationError("ground set limited to 32 labels");
  }
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i].empty()) throw ValidationError("empty label");
    auto [it, fresh] = index_.emplace(labels_[i], i);
    if (!fresh) throw ValidationError("duplicate label '" + labels_[i] + "'");
  }
}

int GroundSet::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw ValidationError("unknown label '" + label + "'");
  return it->second;
}

std::vector<int> GroundSet::indices_of(Mask m) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (m & bit(i)) out.push_back(i);
  return out;
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i)
    if (m & bit(i)) out.push_back(labels_[i]);
  return out;
}

std::string GroundSet::format_mask(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (!(m & bit(i))) continue;
    if (!first) out += ',';
    out += labels_[i];
    first = false;
  }
  out += '}';
  return out;
}

bool mask_lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    int la = lowest_bit(a), lb = lowest_bit(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace m0k
