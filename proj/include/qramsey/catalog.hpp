#pragma once

#include "qramsey/weyl.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qramsey {

// Red: the pair commutes. Green: it does not.
enum class EdgeColor { red, green };

inline const char* color_name(EdgeColor c) { return c == EdgeColor::red ? "red" : "green"; }

// A graph vertex: either a polynomial operator (Symbolic) or a named
// non-polynomial symbol (Declared) whose commutation verdicts come from the
// rule table.
struct ObservableSpec {
  std::string name;
  bool declared = false;
  OperatorPoly poly;      // meaningful only when !declared
  std::string particle;   // "" = the shared default particle
  std::string rule_key;   // identity used for rule-table lookups
};

struct RuleEntry {
  EdgeColor color;
  std::string citation;
};

class unclassifiable_error : public std::runtime_error {
 public:
  unclassifiable_error(const std::string& a, const std::string& b)
      : std::runtime_error("unclassifiable pair (" + a + ", " + b +
                           "): no rule table entry and no symbolic form"),
        a_(a),
        b_(b) {}
  const std::string& first() const { return a_; }
  const std::string& second() const { return b_; }

 private:
  std::string a_, b_;
};

// Symmetric map from unordered name pairs to colors, each entry carrying a
// citation for where the rule comes from.
class RuleTable {
 public:
  // The built-in central-field table: every pair joining one of
  // {r, pr, H_central, H_generic} with any of the fourteen catalog names.
  static const RuleTable& central_field();

  void set(const std::string& a, const std::string& b, EdgeColor color, std::string citation);
  const RuleEntry* find(const std::string& a, const std::string& b) const;
  size_t size() const { return rules_.size(); }

  // Overlay line format: pair <nameA> <nameB> red|green "# citation".
  // Touching a pair of built-in names requires allow_override.
  void apply_overlay(const std::string& text, bool allow_override);

 private:
  static std::pair<std::string, std::string> key(const std::string& a, const std::string& b);
  std::map<std::pair<std::string, std::string>, RuleEntry> rules_;
};

// Observable registry. Construction pre-loads the fourteen built-ins: the ten
// polynomial operators plus the declared symbols r, pr, H_central, H_generic.
class Catalog {
 public:
  Catalog();

  // All three throw std::invalid_argument on duplicates; register_symbolic
  // also rejects non-Hermitian polynomials.
  void register_symbolic(const std::string& name, const OperatorPoly& poly,
                         const std::string& particle = "");
  void register_declared(const std::string& name, const std::string& particle = "");
  // New name for an existing observable (e.g. the same operator on another
  // particle); inherits the source's polynomial and rule identity.
  void register_clone(const std::string& name, const ObservableSpec& source,
                      const std::string& particle);

  bool known(const std::string& name) const;
  const ObservableSpec& resolve(const std::string& name) const;  // throws on unknown

  // Accepts p_x, l_z, p_r style spellings for the built-ins.
  static std::string canonical_name(const std::string& name);

  static const std::vector<std::string>& builtin_names();           // all fourteen
  static const std::vector<std::string>& symbolic_builtin_names();  // the ten polynomials

 private:
  std::map<std::string, ObservableSpec> specs_;
};

struct Classification {
  EdgeColor color;
  std::string basis;  // "computed" or "declared"
  std::string citation;
};

// Total or throwing: cross-particle pairs are Red, table entries win next,
// symbolic pairs are decided by the exact commutator, and anything left is an
// unclassifiable_error.
Classification classify(const ObservableSpec& a, const ObservableSpec& b, const RuleTable& rules);

}  // namespace qramsey
