#include "qramsey/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace qramsey {

namespace {

const std::vector<std::string> kBuiltinNames = {"x",  "y",  "z",  "px", "py", "pz", "lx",
                                                "ly", "lz", "L2", "r",  "pr", "H_central",
                                                "H_generic"};

const std::vector<std::string> kSymbolicNames = {"x",  "y",  "z",  "px", "py",
                                                 "pz", "lx", "ly", "lz", "L2"};

const std::map<std::string, std::string> kAliases = {
    {"p_x", "px"}, {"p_y", "py"}, {"p_z", "pz"}, {"l_x", "lx"},
    {"l_y", "ly"}, {"l_z", "lz"}, {"p_r", "pr"}};

RuleTable make_central_field_table() {
  RuleTable t;
  const std::string coords[] = {"x", "y", "z"};
  const std::string momenta[] = {"px", "py", "pz"};
  const std::string angular[] = {"lx", "ly", "lz"};

  t.set("r", "pr", EdgeColor::green,
        "[r, p_r] = i hbar: canonically conjugate pair (Messiah, Quantum Mechanics, ch. IX)");
  for (const auto& q : coords)
    t.set("r", q, EdgeColor::red, "functions of the coordinates alone commute");
  for (const auto& p : momenta)
    t.set("r", p, EdgeColor::green, "[p_i, r] = -i hbar x_i/r, nonzero");
  for (const auto& l : angular)
    t.set("r", l, EdgeColor::red,
          "r is invariant under rotations: [l_i, r] = 0 (Landau & Lifshitz, QM, sec. 26)");
  t.set("r", "L2", EdgeColor::red, "r is invariant under rotations: [L^2, r] = 0");
  t.set("r", "H_central", EdgeColor::green,
        "kinetic term of H = p^2/2m + U(r) fails to commute with r");
  t.set("r", "H_generic", EdgeColor::green,
        "generic Hamiltonian commutes with no listed observable but itself");

  for (const auto& q : coords)
    t.set("pr", q, EdgeColor::green, "[x_i, p_r] = i hbar x_i/r, nonzero");
  for (const auto& p : momenta)
    t.set("pr", p, EdgeColor::green, "p_r depends on the coordinates through x_i/r: [p_i, p_r] != 0");
  for (const auto& l : angular)
    t.set("pr", l, EdgeColor::red,
          "p_r is invariant under rotations: [l_i, p_r] = 0 (Landau & Lifshitz, QM, sec. 33)");
  t.set("pr", "L2", EdgeColor::red, "p_r is invariant under rotations: [L^2, p_r] = 0");
  t.set("pr", "H_central", EdgeColor::green,
        "[H, p_r] != 0 for a potential U(r) with nonzero gradient");
  t.set("pr", "H_generic", EdgeColor::green,
        "generic Hamiltonian commutes with no listed observable but itself");

  for (const auto& q : coords)
    t.set("H_central", q, EdgeColor::green,
          "kinetic term of H = p^2/2m + U(r) fails to commute with x_i");
  for (const auto& p : momenta)
    t.set("H_central", p, EdgeColor::green,
          "potential term of H = p^2/2m + U(r) fails to commute with p_i");
  for (const auto& l : angular)
    t.set("H_central", l, EdgeColor::red,
          "a central field is rotationally invariant: [H, l_i] = 0 (Landau & Lifshitz, QM, "
          "sec. 29)");
  t.set("H_central", "L2", EdgeColor::red, "a central field is rotationally invariant: [H, L^2] = 0");
  t.set("H_central", "H_generic", EdgeColor::green, "independent Hamiltonians need not commute");

  for (const auto& n : kSymbolicNames)
    t.set("H_generic", n, EdgeColor::green,
          "generic coordinate- and momentum-dependent Hamiltonian commutes only with itself");

  return t;
}

}  // namespace

std::pair<std::string, std::string> RuleTable::key(const std::string& a, const std::string& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

const RuleTable& RuleTable::central_field() {
  static const RuleTable t = make_central_field_table();
  return t;
}

void RuleTable::set(const std::string& a, const std::string& b, EdgeColor color,
                    std::string citation) {
  rules_[key(a, b)] = RuleEntry{color, std::move(citation)};
}

const RuleEntry* RuleTable::find(const std::string& a, const std::string& b) const {
  auto it = rules_.find(key(a, b));
  return it == rules_.end() ? nullptr : &it->second;
}

void RuleTable::apply_overlay(const std::string& text, bool allow_override) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  const auto& builtins = Catalog::builtin_names();
  auto is_builtin = [&](const std::string& n) {
    return std::find(builtins.begin(), builtins.end(), n) != builtins.end();
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    auto fail = [lineno](const std::string& msg) {
      throw std::invalid_argument("rules line " + std::to_string(lineno) + ": " + msg);
    };
    if (word != "pair") fail("expected 'pair', got '" + word + "'");
    std::string a, b, colorword;
    if (!(ls >> a >> b >> colorword)) fail("expected: pair <nameA> <nameB> red|green");
    a = Catalog::canonical_name(a);
    b = Catalog::canonical_name(b);
    EdgeColor color;
    if (colorword == "red")
      color = EdgeColor::red;
    else if (colorword == "green")
      color = EdgeColor::green;
    else
      fail("color must be red or green, got '" + colorword + "'");
    std::string rest;
    std::getline(ls, rest);
    std::string citation;
    auto open = rest.find('"');
    if (open != std::string::npos) {
      auto close = rest.find('"', open + 1);
      if (close == std::string::npos) fail("unterminated citation string");
      citation = rest.substr(open + 1, close - open - 1);
    }
    if (is_builtin(a) && is_builtin(b) && !allow_override)
      fail("overriding built-in pair (" + a + ", " + b + ") requires --allow-override");
    set(a, b, color, citation);
  }
}

Catalog::Catalog() {
  for (const auto& n : kSymbolicNames) register_symbolic(n, builtin_poly(n));
  for (const auto& n : {"r", "pr", "H_central", "H_generic"}) register_declared(n);
}

std::string Catalog::canonical_name(const std::string& name) {
  auto it = kAliases.find(name);
  return it == kAliases.end() ? name : it->second;
}

const std::vector<std::string>& Catalog::builtin_names() { return kBuiltinNames; }
const std::vector<std::string>& Catalog::symbolic_builtin_names() { return kSymbolicNames; }

void Catalog::register_symbolic(const std::string& name, const OperatorPoly& poly,
                                const std::string& particle) {
  const std::string canon = canonical_name(name);
  if (specs_.count(canon))
    throw std::invalid_argument("duplicate observable name: " + canon);
  if (!is_hermitian(poly))
    throw std::invalid_argument("observable " + canon +
                                " is not Hermitian; only Hermitian operators are observables");
  ObservableSpec spec;
  spec.name = canon;
  spec.declared = false;
  spec.poly = poly;
  spec.particle = particle;
  // A custom polynomial that coincides with a built-in inherits its rule
  // identity, so declared-table lookups against r, pr, H_* still work.
  spec.rule_key = canon;
  for (const auto& b : kSymbolicNames)
    if (builtin_poly(b) == poly) {
      spec.rule_key = b;
      break;
    }
  specs_.emplace(canon, std::move(spec));
}

void Catalog::register_clone(const std::string& name, const ObservableSpec& source,
                             const std::string& particle) {
  const std::string canon = canonical_name(name);
  if (specs_.count(canon))
    throw std::invalid_argument("duplicate observable name: " + canon);
  ObservableSpec spec = source;
  spec.name = canon;
  spec.particle = particle;
  specs_.emplace(canon, std::move(spec));
}

void Catalog::register_declared(const std::string& name, const std::string& particle) {
  const std::string canon = canonical_name(name);
  if (specs_.count(canon))
    throw std::invalid_argument("duplicate observable name: " + canon);
  ObservableSpec spec;
  spec.name = canon;
  spec.declared = true;
  spec.particle = particle;
  spec.rule_key = canon;
  specs_.emplace(canon, std::move(spec));
}

bool Catalog::known(const std::string& name) const {
  return specs_.count(canonical_name(name)) != 0;
}

const ObservableSpec& Catalog::resolve(const std::string& name) const {
  auto it = specs_.find(canonical_name(name));
  if (it == specs_.end()) throw std::out_of_range("unknown observable: " + name);
  return it->second;
}

Classification classify(const ObservableSpec& a, const ObservableSpec& b, const RuleTable& rules) {
  if (a.particle != b.particle)
    return {EdgeColor::red, "declared",
            "operators of distinct particles act on different factors and commute"};
  if (a.name == b.name) return {EdgeColor::red, "declared", "every operator commutes with itself"};
  if (const RuleEntry* e = rules.find(a.rule_key, b.rule_key))
    return {e->color, "declared", e->citation};
  if (!a.declared && !b.declared) {
    bool commutes = commutator(a.poly, b.poly).is_zero();
    return {commutes ? EdgeColor::red : EdgeColor::green, "computed", ""};
  }
  throw unclassifiable_error(a.name, b.name);
}

}  // namespace qramsey
