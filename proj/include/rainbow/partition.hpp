// Copyright 2026 The Rainbow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rainbow {

namespace detail {

template <class Allow, class Visit>
class PartitionWalker {
 public:
  PartitionWalker(int size, int blocks, Allow& allow, Visit& visit)
      : size_(size), blocks_(blocks), labels_(static_cast<std::size_t>(size)), allow_(allow), visit_(visit) {}

  void run() {
    if (blocks_ < 0 || blocks_ > size_ || (blocks_ == 0 && size_ > 0)) return;
    descend(0, 0);
  }

  bool stopped() const { return stopped_; }

 private:
  void descend(int pos, int used) {
    if (pos == size_) {
      if (visit_(std::span<const int>(labels_))) stopped_ = true;
      return;
    }
    const int remaining = size_ - pos;
    // Join an existing class: only while enough positions remain to open the
    // classes still missing.
    if (used + remaining - 1 >= blocks_) {
      for (int b = 0; b < used && !stopped_; ++b) {
        if (!allow_(std::span<const int>(labels_.data(), static_cast<std::size_t>(pos)), b)) continue;
        labels_[static_cast<std::size_t>(pos)] = b;
        descend(pos + 1, used);
      }
    }
    if (!stopped_ && used < blocks_ &&
        allow_(std::span<const int>(labels_.data(), static_cast<std::size_t>(pos)), used)) {
      labels_[static_cast<std::size_t>(pos)] = used;
      descend(pos + 1, used + 1);
    }
  }

  int size_;
  int blocks_;
  std::vector<int> labels_;
  Allow& allow_;
  Visit& visit_;
  bool stopped_ = false;
};

}  // namespace detail

/// Visits the partitions of {0..size-1} into exactly `blocks` classes as
/// restricted growth strings in lexicographic order.
///
/// A string is built position by position; a position either opens the next
/// class or merges into an existing one, and exactly size - blocks positions
/// merge. Branches that cannot reach `blocks` classes are never entered, so
/// for a fixed merge count the walk is polynomial in `size`.
///
/// `allow(prefix, label)` may veto assigning `label` at position
/// prefix.size(). `visit(labels)` returns true to stop. Returns true if a
/// visitor stopped the walk.
template <class Allow, class Visit>
bool for_each_partition(int size, int blocks, Allow&& allow, Visit&& visit) {
  detail::PartitionWalker<Allow, Visit> walker(size, blocks, allow, visit);
  walker.run();
  return walker.stopped();
}

template <class Visit>
bool for_each_partition(int size, int blocks, Visit&& visit) {
  return for_each_partition(
      size, blocks, [](std::span<const int>, int) { return true; }, std::forward<Visit>(visit));
}

}  // namespace rainbow
