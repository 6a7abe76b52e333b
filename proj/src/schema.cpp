#include "pgm/schema.hpp"

#include <stdexcept>

#include "pgm/errors.hpp"

namespace pgm {

LabelSchema::LabelSchema(std::vector<LabelSpec> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw SchemaError("schema needs at least one label");
  for (const auto& spec : labels_) {
    if (spec.domain_size == 0)
      throw SchemaError("label '" + spec.name + "' has empty value domain");
    if (!spec.value_names.empty() && spec.value_names.size() != spec.domain_size)
      throw SchemaError("label '" + spec.name + "' value-name table size mismatch");
  }
  strides_.assign(labels_.size(), 1);
  for (std::size_t k = labels_.size(); k-- > 0;) {
    if (k + 1 < labels_.size()) {
      const std::uint64_t below = strides_[k + 1] * labels_[k + 1].domain_size;
      strides_[k] = below;
    }
    const std::uint64_t next = strides_[k] * labels_[k].domain_size;
    if (strides_[k] != 0 && next / strides_[k] != labels_[k].domain_size)
      throw SchemaError("category count overflows 64 bits");
    category_count_ = next;
    if (category_count_ > kMaxCategories)
      throw SchemaError("category count exceeds 2^32; refusing to build multinomial tables");
  }
}

LabelSchema LabelSchema::with_label(LabelSpec spec) const {
  std::vector<LabelSpec> labels = labels_;
  labels.push_back(std::move(spec));
  return LabelSchema(std::move(labels));
}

LabelSchema LabelSchema::without_label(std::size_t k) const {
  if (k >= labels_.size()) throw std::out_of_range("label index out of range");
  std::vector<LabelSpec> labels = labels_;
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(k));
  return LabelSchema(std::move(labels));
}

bool operator==(const LabelSchema& a, const LabelSchema& b) {
  if (a.labels_.size() != b.labels_.size()) return false;
  for (std::size_t k = 0; k < a.labels_.size(); ++k) {
    if (a.labels_[k].name != b.labels_[k].name) return false;
    if (a.labels_[k].domain_size != b.labels_[k].domain_size) return false;
  }
  return true;
}

std::uint64_t encode_label_vector(std::span<const std::uint32_t> values, const LabelSchema& s) {
  if (values.size() != s.label_count())
    throw SchemaError("label vector length does not match schema");
  std::uint64_t id = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] >= s.label(k).domain_size)
      throw SchemaError("value of label '" + s.label(k).name + "' outside its domain");
    id += values[k] * s.stride(k);
  }
  return id;
}

LabelVector decode_category(std::uint64_t id, const LabelSchema& s) {
  if (id >= s.category_count()) throw std::out_of_range("category id out of range");
  LabelVector values(s.label_count());
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = static_cast<std::uint32_t>(id / s.stride(k));
    id %= s.stride(k);
  }
  return values;
}

}  // namespace pgm
