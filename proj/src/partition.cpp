#include "crystalline/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace crystalline {

int eps_g(LieType t) { return t == LieType::C ? 2 : 1; }

char type_letter(LieType t) {
  switch (t) {
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
  }
  return '?';
}

LieType parse_lie_type(std::string_view s) {
  if (s == "b" || s == "B") return LieType::B;
  if (s == "c" || s == "C") return LieType::C;
  if (s == "d" || s == "D") return LieType::D;
  throw std::invalid_argument("unknown Lie type: " + std::string(s));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition conjugate(const Partition& p) {
  std::vector<int> c(p.empty() ? 0 : p.parts()[0], 0);
  for (int r : p.parts())
    for (int j = 0; j < r; ++j) ++c[j];
  return Partition(std::move(c));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner.at(i) > outer.at(i)) return false;
  return true;
}

static void gen_partitions(int n, int max_part, int max_len, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) >= max_len) return;
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, max_len, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n, int max_part, int max_len) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, max_part, max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int n, int max_part, int max_len) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto v = partitions_of(k, max_part, max_len);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

GenPartition::GenPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  const int n = rank();
  for (int i = 0; i + 1 < n; ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("only the last part may be negative");
    int next = (i + 1 == n - 1) ? std::abs(parts_[i + 1]) : parts_[i + 1];
    if (parts_[i] < next) throw std::invalid_argument("generalized partition not decreasing");
  }
}

Partition GenPartition::abs_shape() const {
  std::vector<int> v = parts_;
  if (!v.empty()) v.back() = std::abs(v.back());
  return Partition(v);
}

std::string GenPartition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

}  // namespace crystalline
