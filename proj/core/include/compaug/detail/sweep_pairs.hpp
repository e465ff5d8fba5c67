#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace compaug {

template <typename Fn>
void for_each_box_overlap(std::span<const Box> boxes, Fn&& fn) {
  std::vector<int> order(boxes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return boxes[a].xmin < boxes[b].xmin;
  });
  std::vector<int> active;
  for (int idx : order) {
    const Box& cur = boxes[idx];
    std::erase_if(active, [&](int a) { return boxes[a].xmax < cur.xmin; });
    for (int a : active) {
      if (boxes[a].ymin <= cur.ymax && cur.ymin <= boxes[a].ymax) {
        fn(std::min(a, idx), std::max(a, idx));
      }
    }
    active.push_back(idx);
  }
}

}  // namespace compaug
