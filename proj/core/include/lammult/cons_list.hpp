#ifndef LAMMULT_CONS_LIST_HPP
#define LAMMULT_CONS_LIST_HPP

#include <cstddef>
#include <iterator>
#include <memory>
#include <utility>

namespace lammult {

// Persistent singly-linked list. Copies share structure; all operations
// return new lists and leave their inputs untouched.
template <typename T>
class ConsList {
  struct Node {
    T head;
    std::shared_ptr<const Node> tail;
  };
  using NodePtr = std::shared_ptr<const Node>;

 public:
  ConsList() = default;

  bool empty() const { return head_ == nullptr; }

  const T& front() const { return head_->head; }

  ConsList push_front(T value) const {
    return ConsList{std::make_shared<const Node>(Node{std::move(value), head_})};
  }

  ConsList pop_front() const { return ConsList{head_->tail}; }

  // O(n)
  std::size_t size() const {
    std::size_t n = 0;
    for (const Node* p = head_.get(); p != nullptr; p = p->tail.get()) ++n;
    return n;
  }

  // Two lists are identical (not merely equal) when they share the same spine.
  bool same_spine(const ConsList& other) const { return head_ == other.head_; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using pointer = const T*;
    using reference = const T&;

    iterator() = default;
    explicit iterator(const Node* node) : node_(node) {}
    reference operator*() const { return node_->head; }
    pointer operator->() const { return &node_->head; }
    iterator& operator++() {
      node_ = node_->tail.get();
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) = default;

   private:
    const Node* node_ = nullptr;
  };

  iterator begin() const { return iterator{head_.get()}; }
  iterator end() const { return iterator{}; }

 private:
  explicit ConsList(NodePtr head) : head_(std::move(head)) {}
  NodePtr head_;
};

}  // namespace lammult

#endif
