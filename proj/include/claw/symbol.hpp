#ifndef CLAW_SYMBOL_HPP
#define CLAW_SYMBOL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace claw {

enum class SymbolKind : std::uint8_t {
    IndepVar,     // t
    StateVar,     // u^alpha
    AdjointVar,   // v^alpha
    StateDeriv,   // u_t^alpha
    AdjointDeriv, // v_t^alpha
    Parameter,    // named constant
};

/// A jet-space coordinate or model parameter. Indexed kinds carry a 1-based
/// index; parameters carry a nonempty name.
class Symbol {
  public:
    static Symbol indep();
    static Symbol state(int index);
    static Symbol adjoint(int index);
    static Symbol state_deriv(int index);
    static Symbol adjoint_deriv(int index);
    static Symbol parameter(std::string name);

    SymbolKind kind() const { return kind_; }
    int index() const { return index_; }
    const std::string& name() const { return name_; }

    bool is_derivative() const {
        return kind_ == SymbolKind::StateDeriv || kind_ == SymbolKind::AdjointDeriv;
    }
    bool is_adjoint() const {
        return kind_ == SymbolKind::AdjointVar || kind_ == SymbolKind::AdjointDeriv;
    }

    /// Debug spelling: "t", "u2", "v1", "u2'", "v1'", or the parameter name.
    std::string display() const;

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.kind_ == b.kind_ && a.index_ == b.index_ && a.name_ == b.name_;
    }
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
        if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
        if (auto c = a.index_ <=> b.index_; c != 0) return c;
        return a.name_ <=> b.name_;
    }

    std::size_t hash() const;

  private:
    Symbol(SymbolKind kind, int index, std::string name)
        : kind_(kind), index_(index), name_(std::move(name)) {}

    SymbolKind kind_;
    int index_;
    std::string name_;
};

} // namespace claw

template <>
struct std::hash<claw::Symbol> {
    std::size_t operator()(const claw::Symbol& s) const { return s.hash(); }
};

#endif // CLAW_SYMBOL_HPP
