#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace smashkit {

/// Sorted multiset of positive integers (simple-module dimensions or
/// character degrees).
class DegreeMultiset {
 public:
  DegreeMultiset() = default;
  explicit DegreeMultiset(std::vector<std::uint64_t> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
  }

  const std::vector<std::uint64_t>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::uint64_t sum_of_squares() const {
    std::uint64_t s = 0;
    for (auto v : values_) s += v * v;
    return s;
  }

  std::size_t count(std::uint64_t v) const {
    return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), v));
  }

  void insert(std::uint64_t v) { values_.insert(std::upper_bound(values_.begin(), values_.end(), v), v); }

  /// Union with multiplicities.
  DegreeMultiset merged(const DegreeMultiset& other) const {
    auto all = values_;
    all.insert(all.end(), other.values_.begin(), other.values_.end());
    return DegreeMultiset(std::move(all));
  }

  /// Compact form such as "{1x3, 3, 4x3}".
  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size();) {
      std::size_t j = i;
      while (j < values_.size() && values_[j] == values_[i]) ++j;
      if (i > 0) out += ", ";
      out += std::to_string(values_[i]);
      if (j - i > 1) out += "x" + std::to_string(j - i);
      i = j;
    }
    return out + "}";
  }

  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;

 private:
  std::vector<std::uint64_t> values_;
};

}  // namespace smashkit
