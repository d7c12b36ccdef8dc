#pragma once

#include <compare>
#include <cstdint>
#include <functional>

namespace resproof {

using Var = std::uint32_t;

// Internally a literal is 2*var + negative; externally it is the signed
// DIMACS integer.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Var var, bool negative)
      : code_(2 * var + (negative ? 1u : 0u)) {}

  static Literal from_dimacs(int value);
  int to_dimacs() const;

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool negative() const { return (code_ & 1u) != 0; }
  constexpr bool positive() const { return !negative(); }
  constexpr std::uint32_t code() const { return code_; }

  constexpr Literal operator~() const { return from_code(code_ ^ 1u); }

  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::uint32_t code_ = 0;
};

inline Literal pos(Var v) { return Literal(v, false); }
inline Literal neg(Var v) { return Literal(v, true); }

}  // namespace resproof

template <>
struct std::hash<resproof::Literal> {
  std::size_t operator()(resproof::Literal l) const noexcept {
    return std::hash<std::uint32_t>{}(l.code());
  }
};
