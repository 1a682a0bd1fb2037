#pragma once

#include <stdexcept>
#include <string>

namespace qdt {

// Root of the engine's error hierarchy. Every throw site uses a named
// subclass so callers (and the CLI exit-code mapping) can branch on type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QDT_ERROR_TYPE(Name)                                          \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(what) {}           \
  };

// -- frame / state construction -------------------------------------------
QDT_ERROR_TYPE(EmptyFrame)            // frame needs at least one factor
QDT_ERROR_TYPE(ZeroModes)             // every factor needs at least one mode
QDT_ERROR_TYPE(DuplicateFactorLabel)  // factor labels must be unique
QDT_ERROR_TYPE(FrameMismatch)         // states built over different frames
QDT_ERROR_TYPE(NotNormalized)         // strategic coefficients must have unit norm
QDT_ERROR_TYPE(EmptyLattice)          // lattice needs at least one prospect
QDT_ERROR_TYPE(OverlappingSupports)   // prospect supports must be disjoint

// -- probability / conditionals -------------------------------------------
QDT_ERROR_TYPE(JointNormalizationViolated)  // sum of all partials must be 1
QDT_ERROR_TYPE(ZeroConditioningEvent)       // cannot condition on weight 0
QDT_ERROR_TYPE(DegenerateDenominator)       // composite probability too small
QDT_ERROR_TYPE(ConditionalNotNormalized)    // conditional/weight row must sum to 1
QDT_ERROR_TYPE(LengthMismatch)              // parallel vectors differ in length

// -- calibration ------------------------------------------------------------
QDT_ERROR_TYPE(AllZeroRow)        // a partials row needs a positive entry
QDT_ERROR_TYPE(InfeasibleTarget)  // requested value outside the feasible set
QDT_ERROR_TYPE(NoBracket)         // phase search found no sign change

// -- paradox checkers --------------------------------------------------------
QDT_ERROR_TYPE(PreconditionViolated)        // a checker premise fails
QDT_ERROR_TYPE(BalanceViolated)             // paired rows must sum equally per column
QDT_ERROR_TYPE(InvarianceViolated)          // partial sums must match across prospects
QDT_ERROR_TYPE(UncertaintyPatternViolated)  // attraction ordering premise fails
QDT_ERROR_TYPE(MajorizationViolated)        // row must dominate column-wise
QDT_ERROR_TYPE(NotationViolated)            // inputs not in the required enumeration

// -- sampler ------------------------------------------------------------------
QDT_ERROR_TYPE(ConstraintInfeasible)  // sampling constraints cannot be met

// -- scenario / CLI -----------------------------------------------------------
QDT_ERROR_TYPE(ParseError)            // text is not valid JSON
QDT_ERROR_TYPE(SchemaError)           // JSON shape violates the scenario schema
QDT_ERROR_TYPE(TargetInfeasible)      // scenario numbers cannot be realized
QDT_ERROR_TYPE(UnknownBuiltin)        // no builtin scenario under that name
QDT_ERROR_TYPE(MissingScenarioField)  // a requested check lacks its inputs

#undef QDT_ERROR_TYPE

}  // namespace qdt
