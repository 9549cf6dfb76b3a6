#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace m0k {

/// Subset of the marking set, one bit per label in ground-set order.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline Mask bit(int i) { return Mask{1} << i; }

/// The ordered marking set S.  The label order fixes every canonical
/// ordering downstream, so it is part of the value.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Index of a label; throws ValidationError for unknown labels.
  int index(const std::string& label) const;

  Mask full_mask() const { return (size() == 32) ? ~Mask{0} : (bit(size()) - 1); }
  Mask complement(Mask m) const { return full_mask() & ~m; }

  std::vector<int> indices_of(Mask m) const;
  std::vector<std::string> labels_of(Mask m) const;

  /// Renders a mask as "{a,b,c}" in ground order.
  std::string format_mask(Mask m) const;

  bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

/// Lexicographic order on subsets viewed as ascending index sequences;
/// this is the canonical order for divisor tables and printed sets.
bool mask_lex_less(Mask a, Mask b);

}  // namespace m0k
