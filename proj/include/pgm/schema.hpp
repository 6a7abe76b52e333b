#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pgm {

struct LabelSpec {
  std::string name;
  std::uint32_t domain_size = 0;
  /// Optional display names, either empty or one per value.
  std::vector<std::string> value_names;
};

/// Ordered set of categorical vertex labels. Joint label assignments are
/// flattened to category ids by mixed-radix encoding with label 0 as the
/// most significant digit; there are N = prod(domain sizes) categories.
class LabelSchema {
 public:
  /// Beyond this the multinomial tables are infeasible; construction refuses.
  static constexpr std::uint64_t kMaxCategories = 1ull << 32;

  explicit LabelSchema(std::vector<LabelSpec> labels);

  std::size_t label_count() const { return labels_.size(); }
  std::uint64_t category_count() const { return category_count_; }
  const LabelSpec& label(std::size_t k) const { return labels_[k]; }
  const std::vector<LabelSpec>& labels() const { return labels_; }
  std::uint64_t stride(std::size_t k) const { return strides_[k]; }

  /// Schema with `spec` appended as the new least-significant label.
  LabelSchema with_label(LabelSpec spec) const;
  /// Schema with label k removed.
  LabelSchema without_label(std::size_t k) const;

  /// Structural equality: names and domain sizes (value names are display only).
  friend bool operator==(const LabelSchema& a, const LabelSchema& b);

 private:
  std::vector<LabelSpec> labels_;
  std::vector<std::uint64_t> strides_;  // strides_[k] = prod of domain sizes after k
  std::uint64_t category_count_ = 1;
};

using LabelVector = std::vector<std::uint32_t>;

/// Category id of a joint label assignment: sum of values[k] * stride(k).
std::uint64_t encode_label_vector(std::span<const std::uint32_t> values, const LabelSchema& s);

/// Inverse of encode_label_vector over [0, N).
LabelVector decode_category(std::uint64_t id, const LabelSchema& s);

}  // namespace pgm
