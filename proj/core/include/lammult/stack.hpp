#ifndef LAMMULT_STACK_HPP
#define LAMMULT_STACK_HPP

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "lammult/cons_list.hpp"
#include "lammult/syntax.hpp"

namespace lammult {

// Flat argument stack: one term per cell, front = top.
using FlatStack = ConsList<Term>;

// Segmented stack: each push becomes its own frame, so concatenation is
// deferred instead of performed. Invariant: no frame is ever empty.
using Frame = std::vector<Term>;
using SegStack = ConsList<Frame>;

template <class Stack>
struct Found {
  std::vector<Term> taken;
  Stack rest;
};
struct Insufficient {};

// Maybe ([a], stack): Insufficient leaves the caller's original stack intact
// (the machines halt with the full stack when a pop comes up short).
template <class Stack>
using PopResult = std::variant<Found<Stack>, Insufficient>;

template <class Stack>
bool is_found(const PopResult<Stack>& r) {
  return std::holds_alternative<Found<Stack>>(r);
}
template <class Stack>
const Found<Stack>& get_found(const PopResult<Stack>& r) {
  return std::get<Found<Stack>>(r);
}

// xs ++ s.
FlatStack flat_push(const std::vector<Term>& xs, FlatStack s);

// First n terms if the stack holds at least n, otherwise Insufficient.
PopResult<FlatStack> flat_pop(std::size_t n, const FlatStack& s);

// Prepends xs as a new front frame; O(1). Throws std::invalid_argument on an
// empty xs, which would break the no-empty-frame invariant.
SegStack seg_push(std::vector<Term> xs, SegStack s);

PopResult<SegStack> seg_pop(std::size_t n, const SegStack& s);

// Worker behind seg_pop, with the partially-collected prefix in acc. Each
// iteration either resolves against acc (four guards, in order: exact match;
// overshoot, splitting acc and pushing the leftover as a fresh front frame;
// undershoot with frames left, absorbing one frame; exhausted) or consumes
// exactly one frame. The residual stack never gains an empty frame.
PopResult<SegStack> seg_pop_acc(std::vector<Term> acc, std::size_t n, SegStack s);

FlatStack flatten(const SegStack& s);

// CPS form of seg_pop: extensionally k(seg_pop(n, s)), with the continuation
// threaded unchanged past every frame-absorbing iteration and invoked exactly
// once.
template <class K>
auto seg_pop_cps(std::size_t n, SegStack s, K&& k)
    -> decltype(k(std::declval<PopResult<SegStack>>())) {
  std::vector<Term> acc;
  for (;;) {
    const std::size_t m = acc.size();
    if (m == n) {
      return k(PopResult<SegStack>{Found<SegStack>{std::move(acc), std::move(s)}});
    }
    if (m > n) {
      std::vector<Term> taken(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(n));
      Frame leftover(acc.begin() + static_cast<std::ptrdiff_t>(n), acc.end());
      return k(PopResult<SegStack>{
          Found<SegStack>{std::move(taken), s.push_front(std::move(leftover))}});
    }
    if (s.empty()) return k(PopResult<SegStack>{Insufficient{}});
    const Frame& front = s.front();
    acc.insert(acc.end(), front.begin(), front.end());
    s = s.pop_front();
  }
}

}  // namespace lammult

#endif
