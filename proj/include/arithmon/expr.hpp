#pragma once

#include "arithmon/arith.hpp"
#include "arithmon/oracle.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace arithmon {

/// Abstract syntax for the element expression language:
///
///   expr := atom { ("*" | "∘") atom }
///   atom := "R(" nat "," nat ")" | "R‡(" nat "," nat ")"
///         | "dag(" expr ")" | "id" | "zero" | "(" expr ")"
///         | "[" nat "," nat "]" ("+" | "*")
///         | "P(" nat ";" word "," word ")"
///   word := '"' { digit | "[" nat "]" } '"'
///
/// Composition is juxtaposition order: in a * b, b is applied first.
/// The bracket atoms are the classical pair monoids ([b,a]+ additive,
/// [m,n]* multiplicative) and P(...) is a word-pair element; shape
/// checks for those happen at evaluation, not at parse.
struct Expression {
    struct Gen { Natural a, b; };      // R(a,b)
    struct GenDag { Natural c, d; };   // R‡(c,d)
    struct Id {};
    struct Zero {};
    struct Dag { std::shared_ptr<Expression> child; };
    struct Compose { std::shared_ptr<Expression> lhs, rhs; };
    struct Bicyclic { Natural b, a; }; // [b,a]+
    struct Leech { Natural m, n; };    // [m,n]*
    struct Poly {                      // P(k;"up","down"), digits unchecked
        Natural k;
        std::vector<Natural> up, down;
    };
    using Node = std::variant<Gen, GenDag, Id, Zero, Dag, Compose, Bicyclic,
                              Leech, Poly>;

    Node node;
    std::size_t offset = 1;  // 1-based byte offset of the source snippet
    std::string text;        // source snippet, for error reporting
};

/// Parses the grammar above. Throws std::invalid_argument carrying a
/// 1-based byte offset and the expected-token set on syntax errors.
Expression parse(std::string_view input);

/// Domain error from evaluation, located at the offending sub-expression.
class EvalError : public std::domain_error {
public:
    EvalError(const Expression& where, const std::string& message);
};

/// Folds the tree through the element operations to a normal form.
/// Shape violations (bad digits, non-embeddable atoms) surface here as
/// EvalError with the sub-expression that caused them.
ArithElement evaluate(const Expression& e);

/// Evaluates the same tree against the finite-window referee: leaves
/// are tabulated exactly, every composition node becomes a pointwise
/// table composition. Daggers are distributed down to the leaves first
/// (reversing composition order), so tables are never inverted after
/// losing points. max_modulus reports the largest class modulus seen
/// at any leaf — the caller's yardstick for a comparison margin.
FinitePartialInjection oracle_evaluate(const Expression& e,
                                       const Natural& window,
                                       Natural& max_modulus);

}  // namespace arithmon
