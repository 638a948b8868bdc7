#ifndef LAMMULT_SYNTAX_HPP
#define LAMMULT_SYNTAX_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lammult {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Names match [A-Za-z_][A-Za-z0-9_']*. Fresh names are minted by appending a
// numeric suffix to an existing name.
bool is_valid_identifier(std::string_view name);

struct Identifier {
  std::string name;

  explicit Identifier(std::string n);
  friend bool operator==(const Identifier&, const Identifier&) = default;
  friend auto operator<=>(const Identifier&, const Identifier&) = default;
};

class Term;
struct VarNode;
struct AppNode;
struct FunNode;
struct TermData;

// Immutable term of the multi-argument lambda calculus:
//
//   e ::= x | e<e1 ... en> | \<x1 ... xn>. e
//
// Applications carry a non-empty tuple of arguments; binders bind a non-empty
// tuple of pairwise-distinct variables. Terms are persistent values backed by
// shared nodes, so copies and substitution results share structure freely.
class Term {
 public:
  static Term var(Identifier id);
  static Term var(std::string name);
  static Term app(Term head, std::vector<Term> args);
  static Term fun(std::vector<Identifier> params, Term body);
  static Term fun(std::vector<std::string> params, Term body);

  bool is_var() const;
  bool is_app() const;
  bool is_fun() const;
  const VarNode& as_var() const;
  const AppNode& as_app() const;
  const FunNode& as_fun() const;

  template <class V>
  decltype(auto) visit(V&& v) const;

  // Sorted, duplicate-free; cached on the node at construction time.
  const std::vector<Identifier>& free_vars() const;
  bool closed() const { return free_vars().empty(); }

  bool same_node(const Term& other) const { return data_ == other.data_; }
  const void* node_id() const { return data_.get(); }

  // Structural equality (names compared verbatim; see alpha_eq for the
  // renaming-insensitive version).
  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const TermData> data) : data_(std::move(data)) {}
  std::shared_ptr<const TermData> data_;
};

struct VarNode {
  Identifier id;
};
struct AppNode {
  Term head;
  std::vector<Term> args;
};
struct FunNode {
  std::vector<Identifier> params;
  Term body;
};

struct TermData {
  std::variant<VarNode, AppNode, FunNode> node;
  std::vector<Identifier> free_vars;
};

template <class V>
decltype(auto) Term::visit(V&& v) const {
  return std::visit(std::forward<V>(v), data_->node);
}

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line, int column);
};

// Concrete syntax:
//   term := ident | '(' '\' ident+ '.' term ')' | '(' term term+ ')'
// One parenthesis group is one tuple application: "(f a b)" applies f to the
// pair <a b>, while "((f a) b)" is two nested single-argument applications.
// '#' starts a comment running to end of line.
Term parse(std::string_view text);

std::string print(const Term& t);

std::size_t term_size(const Term& t);

const std::vector<Identifier>& free_vars(const Term& t);

// Simultaneous capture-avoiding substitution. Binders in t that would capture
// a free variable of a replacement are renamed with a fresh numeric suffix.
// Bindings with duplicate identifiers are rejected.
Term subst(const std::vector<std::pair<Identifier, Term>>& bindings, const Term& t);

bool alpha_eq(const Term& a, const Term& b);

// Collapses nested application spines everywhere: App(App(h, xs), ys) becomes
// App(h, xs ++ ys). The result contains no application whose head is itself
// an application.
Term spine_normalize(const Term& t);

bool spine_alpha_eq(const Term& a, const Term& b);

// Deterministic size-bounded term generator. Tuple and binder widths are
// drawn from 1..4; closed terms draw variables only from enclosing binders.
Term gen_term(std::uint64_t seed, std::size_t max_size, bool closed);

}  // namespace lammult

#endif
