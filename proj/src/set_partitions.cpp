#include "unavoidable/set_partitions.hpp"

#include <stdexcept>
#include <vector>

namespace unav {

namespace {

class RgsWalker {
 public:
  RgsWalker(int m, int min_blocks, int max_blocks,
            const std::function<bool(std::span<const Subset>)>& visit)
      : m_(m), min_blocks_(min_blocks), max_blocks_(max_blocks), visit_(visit) {
    blocks_.reserve(m);
  }

  void run() { place(1); }

 private:
  // Returns false once the visitor asked to stop.
  bool place(int v) {
    const int open = static_cast<int>(blocks_.size());
    if (v > m_) return open < min_blocks_ || visit_(blocks_);
    // Not enough vertices left to open the required number of blocks.
    if (open + (m_ - v + 1) < min_blocks_) return true;
    for (int j = 0; j < open; ++j) {
      blocks_[j] = blocks_[j].with(v);
      const bool go_on = place(v + 1);
      blocks_[j] = blocks_[j].without(v);
      if (!go_on) return false;
    }
    if (open < max_blocks_) {
      blocks_.push_back(Subset::singleton(v));
      const bool go_on = place(v + 1);
      blocks_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  int m_;
  int min_blocks_;
  int max_blocks_;
  const std::function<bool(std::span<const Subset>)>& visit_;
  std::vector<Subset> blocks_;
};

}  // namespace

void for_each_set_partition(int m, const std::function<bool(std::span<const Subset>)>& visit) {
  if (m < 1 || m > kMaxGroundSize) throw std::invalid_argument("m outside [1, 63]");
  RgsWalker(m, 1, m, visit).run();
}

void for_each_set_partition(int m, int blocks,
                            const std::function<bool(std::span<const Subset>)>& visit) {
  if (m < 1 || m > kMaxGroundSize) throw std::invalid_argument("m outside [1, 63]");
  if (blocks < 1 || blocks > m) return;
  RgsWalker(m, blocks, blocks, visit).run();
}

std::uint64_t stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  return k <= n ? s[n][k] : 0;
}

}  // namespace unav
