#ifndef CLAW_EXPRESSION_HPP
#define CLAW_EXPRESSION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "claw/rational.hpp"
#include "claw/symbol.hpp"

namespace claw {

enum class ExprKind : std::uint8_t { Rational, Sym, Sum, Product, Power, Exp };

/// Immutable symbolic expression over jet variables, parameters, exact
/// rationals, and exponentials with polynomial arguments in (t, parameters).
///
/// Construction applies light structural normalization only: commutative
/// operands are flattened, constant-folded, and put into one canonical order,
/// so structurally equal trees compare equal node-for-node. Algebraic
/// normalization (common denominators, cancellation) is simplify()'s job.
class Expression {
  public:
    /// The zero expression.
    Expression();

    static Expression rational(Rational value);
    static Expression integer(long long value);
    static Expression sym(Symbol s);
    static Expression sum(std::vector<Expression> terms);
    static Expression product(std::vector<Expression> factors);
    static Expression pow(const Expression& base, int exponent);
    static Expression exp(const Expression& argument);

    ExprKind kind() const;
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return kind() == ExprKind::Rational; }

    const Rational& rational_value() const; // kind() == Rational
    const Symbol& symbol() const;           // kind() == Sym
    const std::vector<Expression>& operands() const; // Sum / Product
    const Expression& base() const;         // Power
    int exponent() const;                   // Power
    const Expression& argument() const;     // Exp

    /// Structural (node-for-node) equality.
    bool identical(const Expression& other) const;
    std::size_t hash() const;

    /// Total structural order; the order used for commutative operands.
    static int compare(const Expression& a, const Expression& b);

    /// Generic spelling with Symbol::display names; for logs and diagnostics.
    std::string str() const;

  private:
    struct Node;
    explicit Expression(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;

    friend Expression simplify(const Expression&);
    friend struct ExprAccess;
};

Expression operator+(const Expression& a, const Expression& b);
Expression operator-(const Expression& a, const Expression& b);
Expression operator*(const Expression& a, const Expression& b);
Expression operator/(const Expression& a, const Expression& b);
Expression operator-(const Expression& a);

/// Partial derivative with respect to one symbol; all other symbols are held
/// constant. The result is simplified.
Expression diff(const Expression& e, const Symbol& s);

/// Simultaneous replacement of symbols, then simplification. Bindings must be
/// closed: no bound symbol may occur in any replacement expression.
Expression substitute(const Expression& e, const std::map<Symbol, Expression>& bindings);

/// Canonical form: a reduced quotient of expanded, content-normalized
/// polynomials. Exponentials are atomic; exp(a)*exp(b) merges to exp(a+b)
/// and exp(0) vanishes.
Expression simplify(const Expression& e);

enum class Equivalence { ProvedEqual, ProvedUnequal, ProbablyEqual };

/// Semantic equality test. ProvedEqual iff simplify(a-b) is the zero node;
/// otherwise falls back to seeded random evaluation (32 points in [0.5, 2],
/// relative tolerance 1e-9, resampling on poles).
Equivalence equivalent(const Expression& a, const Expression& b, std::uint64_t seed = 0);

/// Double-precision evaluation. Every free symbol must be bound.
double eval(const Expression& e, const std::map<Symbol, double>& point);

std::set<Symbol> free_symbols(const Expression& e);
bool contains_derivative(const Expression& e);
bool contains_adjoint(const Expression& e);
bool contains_symbol(const Expression& e, const Symbol& s);

/// An expression flattened to a stack program over a fixed slot layout; the
/// fast-evaluation path used by the integrator and drift monitor.
class CompiledExpression {
  public:
    double eval(std::span<const double> slots) const;

  private:
    struct Instr {
        enum class Op : std::uint8_t { Const, Load, Add, Mul, PowInt, ExpFn } op;
        double constant = 0.0;
        std::uint32_t slot = 0;
        int exponent = 0;
    };
    std::vector<Instr> code_;
    std::size_t stack_need_ = 0;

    friend CompiledExpression compile(const Expression&, const std::map<Symbol, std::size_t>&);
};

/// Compile against a symbol->slot layout. Throws UnboundSymbol for symbols
/// missing from the layout.
CompiledExpression compile(const Expression& e, const std::map<Symbol, std::size_t>& slots);

} // namespace claw

#endif // CLAW_EXPRESSION_HPP
