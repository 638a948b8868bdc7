#include "lammult/syntax.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace lammult {

namespace {

constexpr std::array<const char*, 8> kParamPool = {"x", "y", "z", "u",
                                                   "v", "w", "p", "q"};
constexpr std::array<const char*, 5> kFreePool = {"a", "b", "c", "d", "e"};
constexpr std::size_t kMaxWidth = 4;
constexpr std::size_t kDepthCap = 12;

struct Gen {
  std::mt19937_64 rng;
  bool closed;

  // Raw draws with modulo keep the stream identical across standard library
  // implementations; uniform_int_distribution is not portable.
  std::size_t draw(std::size_t n) { return static_cast<std::size_t>(rng() % n); }

  // Smallest term we can emit in the current scope: a closed term with no
  // variables in scope bottoms out at (\p. p), which costs 2.
  std::size_t min_leaf(const std::vector<Identifier>& scope) const {
    return (closed && scope.empty()) ? 2 : 1;
  }

  Term leaf(const std::vector<Identifier>& scope) {
    if (closed && scope.empty()) {
      Identifier p{kParamPool[draw(kParamPool.size())]};
      return Term::fun(std::vector<Identifier>{p}, Term::var(p));
    }
    if (!scope.empty() && (closed || draw(4) < 3)) {
      return Term::var(scope[draw(scope.size())]);
    }
    return Term::var(std::string(kFreePool[draw(kFreePool.size())]));
  }

  Term gen(std::size_t budget, std::size_t depth, std::vector<Identifier>& scope) {
    const std::size_t ml = min_leaf(scope);
    const bool can_fun = budget >= 2;
    const bool can_app = budget >= 1 + 2 * ml;
    if (depth >= kDepthCap || (!can_fun && !can_app)) return leaf(scope);

    enum Kind { kVar, kApp, kFun };
    std::size_t roll = draw(10);
    Kind kind = roll < 2 ? kVar : roll < 6 ? kApp : kFun;
    if (kind == kApp && !can_app) kind = kFun;
    if (kind == kFun && !can_fun) kind = can_app ? kApp : kVar;
    switch (kind) {
      case kVar:
        return leaf(scope);
      case kApp:
        return gen_app(budget, depth, scope);
      case kFun:
        return gen_fun(budget, depth, scope);
    }
    return leaf(scope);  // unreachable
  }

  Term gen_app(std::size_t budget, std::size_t depth, std::vector<Identifier>& scope) {
    const std::size_t ml = min_leaf(scope);
    const std::size_t avail = budget - 1;
    const std::size_t max_children = std::min(kMaxWidth + 1, avail / ml);
    const std::size_t nchildren = 2 + draw(max_children - 1);

    std::vector<std::size_t> shares(nchildren, ml);
    std::size_t extra = avail - nchildren * ml;
    for (std::size_t i = 0; i < nchildren && extra > 0; ++i) {
      std::size_t take = draw(extra + 1);
      shares[i] += take;
      extra -= take;
    }

    Term head = gen(shares[0], depth + 1, scope);
    std::vector<Term> args;
    args.reserve(nchildren - 1);
    for (std::size_t i = 1; i < nchildren; ++i) {
      args.push_back(gen(shares[i], depth + 1, scope));
    }
    return Term::app(std::move(head), std::move(args));
  }

  Term gen_fun(std::size_t budget, std::size_t depth, std::vector<Identifier>& scope) {
    const std::size_t width = 1 + draw(kMaxWidth);
    std::array<std::size_t, kParamPool.size()> idx;
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < width; ++i) {
      std::swap(idx[i], idx[i + draw(idx.size() - i)]);
    }

    std::vector<Identifier> params;
    params.reserve(width);
    for (std::size_t i = 0; i < width; ++i) {
      params.emplace_back(std::string(kParamPool[idx[i]]));
    }

    scope.insert(scope.end(), params.begin(), params.end());
    Term body = gen(budget - 1, depth + 1, scope);
    scope.erase(scope.end() - static_cast<std::ptrdiff_t>(width), scope.end());
    return Term::fun(std::move(params), std::move(body));
  }
};

}  // namespace

Term gen_term(std::uint64_t seed, std::size_t max_size, bool closed) {
  Gen g{std::mt19937_64(seed), closed};
  std::vector<Identifier> scope;
  std::size_t budget = std::max(max_size, g.min_leaf(scope));
  return g.gen(budget, 0, scope);
}

}  // namespace lammult
