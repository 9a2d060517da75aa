#include "unavoidable/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace unav {

Subset Subset::of(std::initializer_list<int> vertices) {
  return of(std::vector<int>(vertices));
}

Subset Subset::of(const std::vector<int>& vertices) {
  Subset s;
  for (int v : vertices) {
    if (v < 1 || v > kMaxGroundSize) {
      throw std::out_of_range("vertex " + std::to_string(v) + " outside [1, 63]");
    }
    s = s.with(v);
  }
  return s;
}

std::vector<int> Subset::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Bits b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : members()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

void canonicalize(std::vector<Subset>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace unav
