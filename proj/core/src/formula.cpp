#include "efsub/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace efsub {

FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = NodeKind::Exists;
  f->var = std::move(var);
  f->children.push_back(std::move(body));
  return f;
}

FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = NodeKind::Forall;
  f->var = std::move(var);
  f->children.push_back(std::move(body));
  return f;
}

FormulaPtr Formula::conj(std::vector<FormulaPtr> parts) {
  auto f = std::make_shared<Formula>();
  f->kind = NodeKind::And;
  f->children = std::move(parts);
  return f;
}

FormulaPtr Formula::disj(std::vector<FormulaPtr> parts) {
  auto f = std::make_shared<Formula>();
  f->kind = NodeKind::Or;
  f->children = std::move(parts);
  return f;
}

FormulaPtr Formula::negation(FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = NodeKind::Not;
  f->children.push_back(std::move(body));
  return f;
}

FormulaPtr Formula::adjacent(std::string x, std::string y) {
  auto f = std::make_shared<Formula>();
  f->kind = NodeKind::Adj;
  f->lhs = std::move(x);
  f->rhs = std::move(y);
  return f;
}

FormulaPtr Formula::equal(std::string x, std::string y) {
  auto f = std::make_shared<Formula>();
  f->kind = NodeKind::Eq;
  f->lhs = std::move(x);
  f->rhs = std::move(y);
  return f;
}

namespace {

void find_free(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& free) {
  switch (f->kind) {
    case NodeKind::Adj:
    case NodeKind::Eq:
      if (!bound.count(f->lhs)) free.insert(f->lhs);
      if (!bound.count(f->rhs)) free.insert(f->rhs);
      return;
    case NodeKind::Exists:
    case NodeKind::Forall: {
      bool was_bound = bound.count(f->var) > 0;
      bound.insert(f->var);
      find_free(f->children[0], bound, free);
      if (!was_bound) bound.erase(f->var);
      return;
    }
    default:
      for (const auto& c : f->children) find_free(c, bound, free);
  }
}

bool eval_rec(const FormulaPtr& f, const Graph& g,
              std::unordered_map<std::string, int>& env) {
  switch (f->kind) {
    case NodeKind::Adj:
      return g.has_edge(env.at(f->lhs), env.at(f->rhs));
    case NodeKind::Eq:
      return env.at(f->lhs) == env.at(f->rhs);
    case NodeKind::Not:
      return !eval_rec(f->children[0], g, env);
    case NodeKind::And:
      for (const auto& c : f->children)
        if (!eval_rec(c, g, env)) return false;
      return true;
    case NodeKind::Or:
      for (const auto& c : f->children)
        if (eval_rec(c, g, env)) return true;
      return false;
    case NodeKind::Exists: {
      auto saved = env.find(f->var) != env.end() ? std::optional<int>(env[f->var]) : std::nullopt;
      for (int v = 0; v < g.vertex_count(); ++v) {
        env[f->var] = v;
        if (eval_rec(f->children[0], g, env)) {
          if (saved) env[f->var] = *saved; else env.erase(f->var);
          return true;
        }
      }
      if (saved) env[f->var] = *saved; else env.erase(f->var);
      return false;
    }
    case NodeKind::Forall: {
      auto saved = env.find(f->var) != env.end() ? std::optional<int>(env[f->var]) : std::nullopt;
      for (int v = 0; v < g.vertex_count(); ++v) {
        env[f->var] = v;
        if (!eval_rec(f->children[0], g, env)) {
          if (saved) env[f->var] = *saved; else env.erase(f->var);
          return false;
        }
      }
      if (saved) env[f->var] = *saved; else env.erase(f->var);
      return true;
    }
  }
  throw std::logic_error("evaluate: unknown node kind");
}

}  // namespace

bool evaluate(const FormulaPtr& f, const Graph& g) {
  std::set<std::string> bound, free;
  find_free(f, bound, free);
  if (!free.empty())
    throw std::invalid_argument("evaluate: formula is not a sentence; free variable '" +
                                *free.begin() + "'");
  std::unordered_map<std::string, int> env;
  return eval_rec(f, g, env);
}

int quantifier_depth(const FormulaPtr& f) {
  int inner = 0;
  for (const auto& c : f->children) inner = std::max(inner, quantifier_depth(c));
  if (f->kind == NodeKind::Exists || f->kind == NodeKind::Forall) return inner + 1;
  return inner;
}

int variable_width(const FormulaPtr& f) {
  std::set<std::string> names;
  auto collect = [&](auto&& self, const FormulaPtr& n) -> void {
    switch (n->kind) {
      case NodeKind::Adj:
      case NodeKind::Eq:
        names.insert(n->lhs);
        names.insert(n->rhs);
        break;
      case NodeKind::Exists:
      case NodeKind::Forall:
        names.insert(n->var);
        break;
      default:
        break;
    }
    for (const auto& c : n->children) self(self, c);
  };
  collect(collect, f);
  return static_cast<int>(names.size());
}

FormulaPtr canonical_subgraph_sentence(const Graph& f) {
  int l = f.vertex_count();
  if (l < 1) throw std::invalid_argument("canonical_subgraph_sentence: pattern must be non-empty");
  auto var = [](int i) { return "x" + std::to_string(i + 1); };
  std::vector<FormulaPtr> body;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      body.push_back(Formula::negation(Formula::equal(var(i), var(j))));
  for (auto [u, v] : f.edges()) body.push_back(Formula::adjacent(var(u), var(v)));
  FormulaPtr out = Formula::conj(std::move(body));
  for (int i = l - 1; i >= 0; --i) out = Formula::exists(var(i), out);
  return out;
}

FormulaPtr phi_s_sentence(int s) {
  if (s < 3) throw std::invalid_argument("phi_s_sentence: s must be >= 3");
  auto var = [](int i) { return "x" + std::to_string(i + 1); };
  std::vector<FormulaPtr> body;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      body.push_back(Formula::negation(Formula::equal(var(i), var(j))));
  for (int i = 0; i < s; ++i) {
    std::vector<FormulaPtr> inner;
    for (int j = 0; j < s; ++j)
      if (j != i) inner.push_back(Formula::adjacent(var(i), var(j)));
    body.push_back(Formula::exists(var(i), Formula::conj(std::move(inner))));
  }
  FormulaPtr out = Formula::conj(std::move(body));
  for (int i = s - 1; i >= 0; --i) out = Formula::exists(var(i), out);
  return out;
}

namespace {

void format_rec(const FormulaPtr& f, std::ostream& out) {
  switch (f->kind) {
    case NodeKind::Adj:
      out << "(adj " << f->lhs << " " << f->rhs << ")";
      return;
    case NodeKind::Eq:
      out << "(eq " << f->lhs << " " << f->rhs << ")";
      return;
    case NodeKind::Not:
      out << "(not ";
      format_rec(f->children[0], out);
      out << ")";
      return;
    case NodeKind::Exists:
    case NodeKind::Forall:
      out << (f->kind == NodeKind::Exists ? "(exists " : "(forall ") << f->var << " ";
      format_rec(f->children[0], out);
      out << ")";
      return;
    case NodeKind::And:
    case NodeKind::Or:
      out << (f->kind == NodeKind::And ? "(and" : "(or");
      for (const auto& c : f->children) {
        out << " ";
        format_rec(c, out);
      }
      out << ")";
      return;
  }
}

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw std::invalid_argument("formula parse error: expected '" + std::string(1, c) +
                                  "' at offset " + std::to_string(pos));
    ++pos;
  }
  std::string token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '(' &&
           s[pos] != ')')
      ++pos;
    if (start == pos) throw std::invalid_argument("formula parse error: expected token");
    return s.substr(start, pos - start);
  }
  bool at_close() {
    skip_ws();
    return pos < s.size() && s[pos] == ')';
  }

  FormulaPtr parse() {
    expect('(');
    std::string head = token();
    FormulaPtr out;
    if (head == "exists" || head == "forall") {
      std::string v = token();
      FormulaPtr body = parse();
      out = head == "exists" ? Formula::exists(v, body) : Formula::forall(v, body);
    } else if (head == "and" || head == "or") {
      std::vector<FormulaPtr> parts;
      while (!at_close()) parts.push_back(parse());
      out = head == "and" ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
    } else if (head == "not") {
      out = Formula::negation(parse());
    } else if (head == "adj" || head == "eq") {
      std::string a = token(), b = token();
      out = head == "adj" ? Formula::adjacent(a, b) : Formula::equal(a, b);
    } else {
      throw std::invalid_argument("formula parse error: unknown operator '" + head + "'");
    }
    expect(')');
    return out;
  }
};

}  // namespace

std::string format_formula(const FormulaPtr& f) {
  std::ostringstream out;
  format_rec(f, out);
  return out.str();
}

FormulaPtr parse_formula(const std::string& text) {
  Parser p{text};
  FormulaPtr out = p.parse();
  p.skip_ws();
  if (p.pos != text.size())
    throw std::invalid_argument("formula parse error: trailing input at offset " +
                                std::to_string(p.pos));
  return out;
}

}  // namespace efsub
