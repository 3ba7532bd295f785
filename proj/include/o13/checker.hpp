#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "o13/k4.hpp"

namespace o13 {

/// Error in a .refl source file, with 1-based position.
class CheckerError : public std::runtime_error {
 public:
  CheckerError(std::string message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// `charge NAME = 1|P|T|PT|?`; nullopt charge marks an unknown.
struct Declaration {
  std::string name;
  std::optional<K4Charge> charge;
  int line = 0;
};

/// Product of factors. A literal `0` factor makes the whole term zero,
/// which matches any charge.
struct Term {
  std::vector<std::string> factors;
  bool is_zero = false;
  int line = 0;
  int column = 0;
};

struct Equation {
  std::string name;
  std::vector<Term> lhs;
  std::vector<Term> rhs;
  int line = 0;
};

struct Model {
  std::vector<Declaration> declarations;
  std::vector<Equation> equations;
};

/// Line-oriented grammar:
///   charge NAME = 1|P|T|PT|?
///   eq NAME : term (+|-) term ... = term (+|-) term ...
///   term    = factor (* factor)*
///   factor  = NAME | 0
/// `#` starts a comment; whitespace is insignificant. Throws CheckerError
/// on syntax errors, undeclared factors and duplicate declarations.
Model parse(std::string_view source);

/// Charges the paper's Maxwell discussion uses: ddt=T, grad=P, E=P, B=T,
/// rho=1, J=PT. Declarations in the file shadow these.
std::vector<Declaration> builtin_prelude();

/// Charge of a term folded over its factors: a K4 constant plus the set of
/// unknowns appearing an odd number of times (an affine expression over
/// GF(2)^2, one bit pair per unknown).
struct TermCharge {
  bool is_zero = false;
  K4Charge constant = k4_one;
  std::vector<std::string> odd_unknowns;  // sorted
};

using ChargeEnv = std::map<std::string, std::optional<K4Charge>>;

TermCharge term_charge(const Term& term, const ChargeEnv& env);

enum class Verdict { homogeneous, inhomogeneous, unsatisfiable, solved };

std::string_view verdict_name(Verdict v);

struct EquationVerdict {
  std::string equation;
  Verdict verdict;
  /// Homogeneous: the shared charge; empty optional when every term is a
  /// zero literal (any charge fits).
  std::optional<K4Charge> charge;
  /// Inhomogeneous: charges of the non-zero terms in source order.
  std::vector<K4Charge> conflict;
  /// Solved: one satisfying assignment for the unknowns in this equation.
  std::map<std::string, K4Charge> assignments;
};

struct Report {
  std::vector<EquationVerdict> verdicts;
  /// True when every equation is homogeneous or solvable.
  bool all_ok() const;
};

/// Decides reflection homogeneity per equation. Equations without unknowns
/// are homogeneous iff all non-zero terms share one charge. Unknowns turn
/// pairwise term equality into a linear system over GF(2)^2, solved
/// jointly across the model; a consistent system yields one satisfying
/// assignment, an inconsistent one marks the involved equations
/// unsatisfiable.
Report check(const Model& model,
             const std::vector<Declaration>& prelude = {});

std::string report_to_json(const Report& report);
std::string report_to_text(const Report& report);

/// Charge of a `*`-product expression over a fixed vocabulary: the charge
/// literals, the prelude symbols, and the canonical objects
/// (x, p, u, A, F, M, W, g, eps, lap). Throws CheckerError on unknown
/// names.
K4Charge evaluate_charge_expression(std::string_view expr);

}  // namespace o13
