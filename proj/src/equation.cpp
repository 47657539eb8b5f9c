#include "relsg/equation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lexer.hpp"

namespace relsg {

Atom Atom::relation(std::string name, std::vector<Term> args) {
  if (name.empty()) throw Error("relation atom needs a name");
  return Atom(Kind::relation, std::move(name), std::move(args));
}

Atom Atom::equality(Term lhs, Term rhs) {
  return Atom(Kind::equality, {}, {std::move(lhs), std::move(rhs)});
}

std::vector<std::string> variables_of(const std::vector<Atom>& atoms) {
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (const auto& a : atoms) {
    for (const auto& t : a.args()) {
      if (auto v = std::get_if<Variable>(&t); v && seen.insert(v->name).second) {
        vars.push_back(v->name);
      }
    }
  }
  return vars;
}

EquationSystem::EquationSystem(std::vector<Atom> atoms)
    : atoms_(std::move(atoms)), variables_(variables_of(atoms_)) {}

EquationSystem::EquationSystem(std::vector<Atom> atoms, std::vector<std::string> variables)
    : atoms_(std::move(atoms)), variables_(std::move(variables)) {
  std::set<std::string> declared;
  for (const auto& v : variables_) {
    if (!declared.insert(v).second) throw Error("duplicate variable '" + v + "'");
  }
  for (const auto& v : variables_of(atoms_)) {
    if (!declared.count(v)) throw UnknownVariableError("variable '" + v + "' is not declared");
  }
}

EquationSystem EquationSystem::subsystem(const std::vector<std::size_t>& positions) const {
  std::vector<Atom> picked;
  picked.reserve(positions.size());
  for (auto p : positions) picked.push_back(atoms_.at(p));
  return EquationSystem(std::move(picked), variables_);
}

EquationSystem EquationSystem::with_variables(const std::vector<std::string>& extra) const {
  auto vars = variables_;
  for (const auto& v : extra) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  return EquationSystem(atoms_, std::move(vars));
}

std::string to_string(const ElementRef& ref) {
  if (auto id = std::get_if<ElementId>(&ref)) return "#" + std::to_string(*id);
  const auto& t = std::get<PowerTuple>(ref);
  std::string out = "[";
  for (std::size_t k = 0; k < t.coords.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(t.coords[k]);
  }
  return out + "]";
}

std::string to_string(const Term& term) {
  if (auto v = std::get_if<Variable>(&term)) return v->name;
  return to_string(std::get<Constant>(term).value);
}

std::string to_string(const Atom& atom) {
  if (atom.is_equality()) return to_string(atom.args()[0]) + " = " + to_string(atom.args()[1]);
  std::string out = atom.name() + "(";
  for (std::size_t k = 0; k < atom.args().size(); ++k) {
    if (k) out += ", ";
    out += to_string(atom.args()[k]);
  }
  return out + ")";
}

std::string to_string(const EquationSystem& sys) {
  std::string out;
  for (const auto& a : sys.atoms()) out += to_string(a) + "\n";
  return out;
}

namespace {

Atom parse_atom_at(detail::Cursor& cur) {
  // A relation atom starts with NAME '('; anything else is an equality.
  if (cur.at_identifier()) {
    detail::Cursor probe = cur;
    probe.identifier();
    if (probe.peek() == '(') {
      std::string name = cur.identifier();
      cur.expect('(');
      std::vector<Term> args;
      if (!cur.accept(')')) {
        do {
          args.push_back(cur.term());
        } while (cur.accept(','));
        cur.expect(')');
      }
      return Atom::relation(std::move(name), std::move(args));
    }
  }
  Term lhs = cur.term();
  cur.expect('=');
  Term rhs = cur.term();
  return Atom::equality(std::move(lhs), std::move(rhs));
}

}  // namespace

Atom parse_atom(std::string_view text) {
  detail::Cursor cur(text, 1);
  Atom a = parse_atom_at(cur);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return a;
}

EquationSystem parse_system(std::string_view text) {
  std::vector<Atom> atoms;
  const auto lines = detail::split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    detail::Cursor cur(detail::strip_comment(lines[k]), k + 1);
    if (cur.at_end()) continue;
    atoms.push_back(parse_atom_at(cur));
    if (!cur.at_end()) cur.fail("unexpected trailing input");
  }
  return EquationSystem(std::move(atoms));
}

}  // namespace relsg
