#include "lammult/stack.hpp"

#include <stdexcept>

namespace lammult {

FlatStack flat_push(const std::vector<Term>& xs, FlatStack s) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) s = s.push_front(*it);
  return s;
}

PopResult<FlatStack> flat_pop(std::size_t n, const FlatStack& s) {
  std::vector<Term> taken;
  taken.reserve(n);
  FlatStack rest = s;
  for (std::size_t i = 0; i < n; ++i) {
    if (rest.empty()) return Insufficient{};
    taken.push_back(rest.front());
    rest = rest.pop_front();
  }
  return Found<FlatStack>{std::move(taken), std::move(rest)};
}

SegStack seg_push(std::vector<Term> xs, SegStack s) {
  if (xs.empty()) throw std::invalid_argument("seg_push: empty frame");
  return s.push_front(std::move(xs));
}

PopResult<SegStack> seg_pop(std::size_t n, const SegStack& s) {
  return seg_pop_acc({}, n, s);
}

PopResult<SegStack> seg_pop_acc(std::vector<Term> acc, std::size_t n, SegStack s) {
  for (;;) {
    const std::size_t m = acc.size();
    if (m == n) return Found<SegStack>{std::move(acc), std::move(s)};
    if (m > n) {
      std::vector<Term> taken(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(n));
      Frame leftover(acc.begin() + static_cast<std::ptrdiff_t>(n), acc.end());
      return Found<SegStack>{std::move(taken), s.push_front(std::move(leftover))};
    }
    if (s.empty()) return Insufficient{};
    const Frame& front = s.front();
    acc.insert(acc.end(), front.begin(), front.end());
    s = s.pop_front();
  }
}

FlatStack flatten(const SegStack& s) {
  std::vector<Term> all;
  for (const Frame& seg : s) all.insert(all.end(), seg.begin(), seg.end());
  FlatStack out;
  for (auto it = all.rbegin(); it != all.rend(); ++it) out = out.push_front(*it);
  return out;
}

}  // namespace lammult
