#include "lammult/syntax.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace lammult {

namespace {

using Bindings = std::map<Identifier, Term>;
using Memo = std::unordered_map<const void*, Term>;

bool intersects(const std::vector<Identifier>& sorted_fv, const Bindings& sigma) {
  auto it = sigma.begin();
  for (const Identifier& v : sorted_fv) {
    while (it != sigma.end() && it->first < v) ++it;
    if (it == sigma.end()) return false;
    if (it->first == v) return true;
  }
  return false;
}

Identifier fresh_name(const Identifier& base, const std::set<Identifier>& avoid) {
  for (unsigned long long k = 1;; ++k) {
    Identifier candidate{base.name + std::to_string(k)};
    if (!avoid.contains(candidate)) return candidate;
  }
}

// The memo is valid for one sigma only; binders that shadow or rename get a
// fresh memo for their subtree.
Term subst_rec(const Bindings& sigma, Memo& memo, const Term& t) {
  if (sigma.empty()) return t;
  if (!intersects(t.free_vars(), sigma)) return t;
  if (auto hit = memo.find(t.node_id()); hit != memo.end()) return hit->second;

  Term result = t.visit(Overloaded{
      [&](const VarNode& v) {
        auto f = sigma.find(v.id);
        return f == sigma.end() ? t : f->second;
      },
      [&](const AppNode& a) {
        Term head = subst_rec(sigma, memo, a.head);
        bool changed = !head.same_node(a.head);
        std::vector<Term> args;
        args.reserve(a.args.size());
        for (const Term& arg : a.args) {
          Term n = subst_rec(sigma, memo, arg);
          changed = changed || !n.same_node(arg);
          args.push_back(std::move(n));
        }
        if (!changed) return t;
        return Term::app(std::move(head), std::move(args));
      },
      [&](const FunNode& f) {
        Bindings restricted;
        bool shadowed = false;
        for (const auto& [k, v] : sigma) {
          if (std::find(f.params.begin(), f.params.end(), k) == f.params.end()) {
            restricted.emplace(k, v);
          } else {
            shadowed = true;
          }
        }
        if (restricted.empty()) return t;

        const std::vector<Identifier>& body_fv = f.body.free_vars();
        std::set<Identifier> capture;
        bool applies = false;
        for (const auto& [k, v] : restricted) {
          if (std::binary_search(body_fv.begin(), body_fv.end(), k)) {
            applies = true;
            capture.insert(v.free_vars().begin(), v.free_vars().end());
          }
        }
        if (!applies) return t;

        std::set<Identifier> avoid(capture);
        avoid.insert(body_fv.begin(), body_fv.end());
        avoid.insert(f.params.begin(), f.params.end());

        std::vector<Identifier> new_params;
        new_params.reserve(f.params.size());
        Bindings inner = restricted;
        bool renamed = false;
        for (const Identifier& p : f.params) {
          if (capture.contains(p)) {
            Identifier np = fresh_name(p, avoid);
            avoid.insert(np);
            inner.emplace(p, Term::var(np));
            new_params.push_back(std::move(np));
            renamed = true;
          } else {
            new_params.push_back(p);
          }
        }

        Term body = [&] {
          if (!renamed && !shadowed) return subst_rec(sigma, memo, f.body);
          Memo fresh_memo;
          return subst_rec(inner, fresh_memo, f.body);
        }();
        return Term::fun(std::move(new_params), std::move(body));
      }});

  memo.emplace(t.node_id(), result);
  return result;
}

}  // namespace

Term subst(const std::vector<std::pair<Identifier, Term>>& bindings, const Term& t) {
  Bindings sigma;
  for (const auto& [id, replacement] : bindings) {
    if (!sigma.emplace(id, replacement).second) {
      throw std::invalid_argument("duplicate identifier in substitution: " + id.name);
    }
  }
  Memo memo;
  return subst_rec(sigma, memo, t);
}

}  // namespace lammult
