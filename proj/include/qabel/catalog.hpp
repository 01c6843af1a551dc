#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qabel/rational.hpp"
#include "qabel/sample.hpp"

namespace qabel {

enum class IdentityKind { finite, infinite, recurrence };

const char* kind_name(IdentityKind k);

// Minimal predicate DSL for the exported manifest: expressions are signed
// monomials coef * prod sym^e over the entry's symbols (base symbols stand
// for sigma^2).
struct Monomial {
    Rational coef = Rational(1);
    std::vector<std::pair<std::string, int>> powers;

    Rational eval(const ParamPoint& pt) const;
    std::string str() const;
};

Monomial mono(const Rational& coef, std::initializer_list<std::pair<const char*, int>> pows = {});
Monomial mono(std::initializer_list<std::pair<const char*, int>> pows);

struct Constraint {
    enum class Kind { nonzero, neq, abs_lt };
    Kind kind;
    Monomial lhs;
    Monomial rhs;  // neq: the other side; abs_lt: the bound (constant monomial)

    bool holds(const ParamPoint& pt) const;
    std::string str() const;
};

Constraint nonzero(Monomial m);
Constraint neq(Monomial a, Monomial b);
Constraint abs_lt(Monomial m, const Rational& bound);

struct SymbolSet {
    std::vector<std::string> scalars;
    std::vector<std::string> half_bases;
};

using ExactEval = std::function<Rational(const ParamPoint&, long)>;

struct IdentityEntry {
    std::string id;
    IdentityKind kind = IdentityKind::finite;
    std::string paper_anchor;
    SymbolSet symbols;
    std::vector<Constraint> constraints;
    long n_min = 0;
    long default_n_max = 4;
    int default_trials = 0;  // 0: kind default (finite/recurrence 10, infinite 3)

    // Exact evaluators for finite/recurrence entries. Infinite entries are
    // dispatched to the numeric module by id and leave these empty.
    ExactEval lhs;
    ExactEval rhs;
    // Further residuals that must vanish alongside lhs - rhs (alternate
    // printed forms, boundary-value cross-checks, multi-pattern sweeps).
    std::vector<std::pair<std::string, ExactEval>> extra_residuals;

    std::string parent_id;         // empty: no specialization chain
    std::string substitution_note;  // the proof's substitution map, human-readable

    bool exact() const { return kind != IdentityKind::infinite; }
    Rational residual(const ParamPoint& pt, long n) const;
};

class Catalog {
public:
    static const Catalog& instance();

    const std::vector<IdentityEntry>& entries() const { return entries_; }
    const IdentityEntry& at(const std::string& id) const;      // resolves aliases
    const IdentityEntry* find(const std::string& id) const;    // nullptr if unknown
    std::vector<const IdentityEntry*> by_kind(IdentityKind k) const;

private:
    Catalog();
    std::vector<IdentityEntry> entries_;
    std::vector<std::pair<std::string, std::string>> aliases_;
};

// Deterministic listing, alphabetical by id.
struct IdentityInfo {
    std::string id;
    IdentityKind kind;
    std::string paper_anchor;
    std::vector<std::string> free_symbols;
};
std::vector<IdentityInfo> list_identities();

// Exact residual of a finite catalog identity at a point.
Rational finite_residual(const std::string& id, const ParamPoint& pt, long n);

// Exact residual of a recurrence entry; range_error below the entry's offset.
Rational recurrence_residual(const std::string& id, const ParamPoint& pt, long n);

// Residual of Eq.-level combinatorial identity in exact integers; 0 for all n >= 1.
Rational binomial_identity_residual(long n);

// ------------------------- specialization chains -------------------------

// A chain lifts a sampled point for the child entry to its parent (square
// roots sampled first so all required roots exist over Q), evaluates both
// residuals, and returns parent - scale * child with the proof's multiplier.
struct SpecializationChain {
    std::string entry_id;
    std::string parent_id;
    std::string note;
    SymbolSet lift_symbols;
    std::function<Rational(const ParamPoint&, long)> residual;
};

const std::vector<SpecializationChain>& specialization_chains();
const SpecializationChain* find_chain(const std::string& entry_id);

// Residual of the chain for `id` at a lifted point; pre: entry has a parent.
Rational verify_specialization(const std::string& id, const ParamPoint& lift_point, long n);

}  // namespace qabel
