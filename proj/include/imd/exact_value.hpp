#pragma once

// ExactValue: a rational, cyclotomic or algebraic number, as they appear in
// T-matrix diagonals and normalized S-matrices.

#include <imd/algebraic.hpp>
#include <imd/cyclotomic.hpp>

#include <optional>
#include <variant>

namespace imd {

using ExactValue = std::variant<Rational, Cyclotomic, Algebraic>;

inline bool exact_is_zero(const ExactValue& v) {
  return std::visit([](const auto& x) -> bool {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
      return x == 0;
    else
      return x.is_zero();
  }, v);
}

/// Multiplicative order of a root of unity, absent for all other values.
/// Throws on zero.
inline std::optional<long> is_root_of_unity(const ExactValue& v) {
  return std::visit([](const auto& x) -> std::optional<long> {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
      if (x == 0) throw std::domain_error("is_root_of_unity: argument is zero");
      if (x == 1) return 1;
      if (x == -1) return 2;
      return std::nullopt;
    } else {
      return x.order_as_root_of_unity();
    }
  }, v);
}

/// Embeds into a cyclotomic field; rejects values with no such embedding.
inline Cyclotomic exact_to_cyclotomic(const ExactValue& v) {
  if (std::holds_alternative<Rational>(v))
    return Cyclotomic(std::get<Rational>(v));
  if (std::holds_alternative<Cyclotomic>(v)) return std::get<Cyclotomic>(v);
  return std::get<Algebraic>(v).to_cyclotomic();
}

}  // namespace imd
