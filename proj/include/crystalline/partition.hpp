#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crystalline {

using Coeff = std::int64_t;

enum class LieType { B, C, D };

// 2 for type C, 1 for B and D.
int eps_g(LieType t);
char type_letter(LieType t);
LieType parse_lie_type(std::string_view s);

class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  // 0-based; zero beyond the length.
  int at(int i) const { return i < length() ? parts_[i] : 0; }

  std::string str() const;  // "3,1" or "" for empty

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);
bool contains(const Partition& outer, const Partition& inner);

// All partitions of n with parts <= max_part and length <= max_len, in
// reverse lexicographic order (largest first).
std::vector<Partition> partitions_of(int n, int max_part = 1 << 20, int max_len = 1 << 20);
std::vector<Partition> partitions_up_to(int n, int max_part = 1 << 20, int max_len = 1 << 20);

// (λ1,...,λn) with λ1 >= ... >= λ_{n-1} >= |λn|.
class GenPartition {
 public:
  GenPartition() = default;
  explicit GenPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rank() const { return static_cast<int>(parts_.size()); }
  bool negative() const { return !parts_.empty() && parts_.back() < 0; }
  Partition abs_shape() const;
  std::string str() const;

  auto operator<=>(const GenPartition&) const = default;
  bool operator==(const GenPartition&) const = default;

 private:
  std::vector<int> parts_;
};

}  // namespace crystalline
