#include "lammult/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace lammult {

bool is_valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  char c0 = name.front();
  if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_')) return false;
  for (char c : name.substr(1)) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  }
  return true;
}

Identifier::Identifier(std::string n) : name(std::move(n)) {
  if (!is_valid_identifier(name)) {
    throw std::invalid_argument("invalid identifier: \"" + name + "\"");
  }
}

namespace {

std::vector<Identifier> merge_sorted(const std::vector<Identifier>& a,
                                     const std::vector<Identifier>& b) {
  std::vector<Identifier> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Term Term::var(Identifier id) {
  std::vector<Identifier> fv{id};
  return Term{std::make_shared<const TermData>(
      TermData{VarNode{std::move(id)}, std::move(fv)})};
}

Term Term::var(std::string name) { return var(Identifier{std::move(name)}); }

Term Term::app(Term head, std::vector<Term> args) {
  if (args.empty()) {
    throw std::invalid_argument("application tuple must be non-empty");
  }
  std::vector<Identifier> fv = head.free_vars();
  for (const Term& a : args) fv = merge_sorted(fv, a.free_vars());
  return Term{std::make_shared<const TermData>(
      TermData{AppNode{std::move(head), std::move(args)}, std::move(fv)})};
}

Term Term::fun(std::vector<Identifier> params, Term body) {
  if (params.empty()) {
    throw std::invalid_argument("binder must bind at least one variable");
  }
  std::vector<Identifier> sorted = params;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("binder parameters must be pairwise distinct");
  }
  std::vector<Identifier> fv;
  std::set_difference(body.free_vars().begin(), body.free_vars().end(),
                      sorted.begin(), sorted.end(), std::back_inserter(fv));
  return Term{std::make_shared<const TermData>(
      TermData{FunNode{std::move(params), std::move(body)}, std::move(fv)})};
}

Term Term::fun(std::vector<std::string> params, Term body) {
  std::vector<Identifier> ids;
  ids.reserve(params.size());
  for (std::string& p : params) ids.emplace_back(std::move(p));
  return fun(std::move(ids), std::move(body));
}

bool Term::is_var() const { return std::holds_alternative<VarNode>(data_->node); }
bool Term::is_app() const { return std::holds_alternative<AppNode>(data_->node); }
bool Term::is_fun() const { return std::holds_alternative<FunNode>(data_->node); }

const VarNode& Term::as_var() const { return std::get<VarNode>(data_->node); }
const AppNode& Term::as_app() const { return std::get<AppNode>(data_->node); }
const FunNode& Term::as_fun() const { return std::get<FunNode>(data_->node); }

const std::vector<Identifier>& Term::free_vars() const { return data_->free_vars; }

const std::vector<Identifier>& free_vars(const Term& t) { return t.free_vars(); }

bool operator==(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  return a.visit(Overloaded{
      [&](const VarNode& v) { return b.is_var() && b.as_var().id == v.id; },
      [&](const AppNode& ap) {
        if (!b.is_app()) return false;
        const AppNode& bp = b.as_app();
        return ap.args == bp.args && ap.head == bp.head;
      },
      [&](const FunNode& f) {
        if (!b.is_fun()) return false;
        const FunNode& bf = b.as_fun();
        return f.params == bf.params && f.body == bf.body;
      }});
}

namespace {

void print_into(const Term& t, std::string& out) {
  t.visit(Overloaded{
      [&](const VarNode& v) { out += v.id.name; },
      [&](const AppNode& a) {
        out += '(';
        print_into(a.head, out);
        for (const Term& arg : a.args) {
          out += ' ';
          print_into(arg, out);
        }
        out += ')';
      },
      [&](const FunNode& f) {
        out += "(\\";
        bool first = true;
        for (const Identifier& p : f.params) {
          if (!first) out += ' ';
          out += p.name;
          first = false;
        }
        out += ". ";
        print_into(f.body, out);
        out += ')';
      }});
}

}  // namespace

std::string print(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::size_t term_size(const Term& t) {
  return t.visit(Overloaded{
      [](const VarNode&) -> std::size_t { return 1; },
      [](const AppNode& a) {
        std::size_t n = 1 + term_size(a.head);
        for (const Term& arg : a.args) n += term_size(arg);
        return n;
      },
      [](const FunNode& f) { return 1 + term_size(f.body); }});
}

namespace {

// Bound variables are compared through de Bruijn-style levels; free variables
// must match by name.
struct AlphaEnv {
  std::map<Identifier, std::size_t> levels;
  std::size_t next = 0;
};

bool alpha_eq_rec(const Term& a, AlphaEnv& ea, const Term& b, AlphaEnv& eb) {
  if (a.same_node(b) && ea.levels == eb.levels) return true;
  return a.visit(Overloaded{
      [&](const VarNode& v) {
        if (!b.is_var()) return false;
        const Identifier& w = b.as_var().id;
        auto ia = ea.levels.find(v.id);
        auto ib = eb.levels.find(w);
        if (ia != ea.levels.end() || ib != eb.levels.end()) {
          return ia != ea.levels.end() && ib != eb.levels.end() &&
                 ia->second == ib->second;
        }
        return v.id == w;
      },
      [&](const AppNode& ap) {
        if (!b.is_app()) return false;
        const AppNode& bp = b.as_app();
        if (ap.args.size() != bp.args.size()) return false;
        if (!alpha_eq_rec(ap.head, ea, bp.head, eb)) return false;
        for (std::size_t i = 0; i < ap.args.size(); ++i) {
          if (!alpha_eq_rec(ap.args[i], ea, bp.args[i], eb)) return false;
        }
        return true;
      },
      [&](const FunNode& f) {
        if (!b.is_fun()) return false;
        const FunNode& bf = b.as_fun();
        if (f.params.size() != bf.params.size()) return false;
        AlphaEnv na = ea;
        AlphaEnv nb = eb;
        for (std::size_t i = 0; i < f.params.size(); ++i) {
          std::size_t level = std::max(na.next, nb.next);
          na.levels[f.params[i]] = level;
          nb.levels[bf.params[i]] = level;
          na.next = nb.next = level + 1;
        }
        return alpha_eq_rec(f.body, na, bf.body, nb);
      }});
}

}  // namespace

bool alpha_eq(const Term& a, const Term& b) {
  AlphaEnv ea, eb;
  return alpha_eq_rec(a, ea, b, eb);
}

Term spine_normalize(const Term& t) {
  return t.visit(Overloaded{
      [&](const VarNode&) { return t; },
      [&](const FunNode& f) {
        Term body = spine_normalize(f.body);
        if (body.same_node(f.body)) return t;
        return Term::fun(f.params, std::move(body));
      },
      [&](const AppNode& a) {
        Term head = spine_normalize(a.head);
        std::vector<Term> args;
        args.reserve(a.args.size());
        bool changed = !head.same_node(a.head);
        for (const Term& arg : a.args) {
          Term n = spine_normalize(arg);
          changed = changed || !n.same_node(arg);
          args.push_back(std::move(n));
        }
        if (head.is_app()) {
          // App(App(h, xs), ys) => App(h, xs ++ ys); head is already
          // normalized, so its own head cannot be an application.
          const AppNode& inner = head.as_app();
          std::vector<Term> merged = inner.args;
          merged.insert(merged.end(), args.begin(), args.end());
          return Term::app(inner.head, std::move(merged));
        }
        if (!changed) return t;
        return Term::app(std::move(head), std::move(args));
      }});
}

bool spine_alpha_eq(const Term& a, const Term& b) {
  return alpha_eq(spine_normalize(a), spine_normalize(b));
}

}  // namespace lammult
