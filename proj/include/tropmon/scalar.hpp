#ifndef TROPMON_SCALAR_HPP_
#define TROPMON_SCALAR_HPP_

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "tropmon/errors.hpp"

namespace tropmon {

  //! An element of the integral tropical semiring Z u {-inf}.
  //!
  //! Addition is max and multiplication is integer addition, with -inf the
  //! additive identity and the multiplicative zero. Finite values are kept
  //! inside [-guard, guard] where guard = 2^(digits - 3) (2^60 for int64);
  //! any operation leaving that interval throws OverflowError.
  //!
  //! -inf is stored as the minimum value of Int, so the natural integer order
  //! on the raw representation is the tropical order and max() on raw values
  //! is the tropical sum.
  template <std::signed_integral Int>
  class Tropical {
   public:
    using int_type = Int;

    static constexpr Int neg_inf_raw = std::numeric_limits<Int>::min();
    static constexpr Int guard = Int(1) << (std::numeric_limits<Int>::digits - 3);

    constexpr Tropical() noexcept : _raw(neg_inf_raw) {}

    // Implicit so that literal matrices read naturally.
    constexpr Tropical(Int value) : _raw(check(value)) {}  // NOLINT

    static constexpr Tropical neg_inf() noexcept {
      return Tropical();
    }

    static constexpr Tropical one() noexcept {
      return Tropical(Int(0));
    }

    // No range check; `raw` must be neg_inf_raw or inside the guard.
    static constexpr Tropical from_raw(Int raw) noexcept {
      Tropical t;
      t._raw = raw;
      return t;
    }

    static constexpr Int check(Int value) {
      if (value > guard || value < -guard) {
        throw OverflowError("tropical value " + std::to_string(value)
                            + " exceeds the guard magnitude");
      }
      return value;
    }

    [[nodiscard]] constexpr bool is_finite() const noexcept {
      return _raw != neg_inf_raw;
    }

    [[nodiscard]] constexpr bool is_neg_inf() const noexcept {
      return _raw == neg_inf_raw;
    }

    // Finite value; undefined for -inf (check is_finite first).
    [[nodiscard]] constexpr Int value() const noexcept {
      return _raw;
    }

    [[nodiscard]] constexpr Int raw() const noexcept {
      return _raw;
    }

    constexpr bool operator==(Tropical const&) const noexcept = default;
    constexpr auto operator<=>(Tropical const&) const noexcept = default;

   private:
    Int _raw;
  };

  // Tropical sum: max, with -inf neutral.
  template <std::signed_integral Int>
  constexpr Tropical<Int> oplus(Tropical<Int> x, Tropical<Int> y) noexcept {
    return x < y ? y : x;
  }

  // Tropical product: integer addition, with -inf absorbing.
  template <std::signed_integral Int>
  constexpr Tropical<Int> otimes(Tropical<Int> x, Tropical<Int> y) {
    if (x.is_neg_inf() || y.is_neg_inf()) {
      return Tropical<Int>::neg_inf();
    }
    // Both operands are within 2^(digits-3), so the sum cannot wrap.
    return Tropical<Int>(static_cast<Int>(x.value() + y.value()));
  }

  template <std::signed_integral Int>
  constexpr Tropical<Int> operator+(Tropical<Int> x, Tropical<Int> y) noexcept {
    return oplus(x, y);
  }

  template <std::signed_integral Int>
  constexpr Tropical<Int> operator*(Tropical<Int> x, Tropical<Int> y) {
    return otimes(x, y);
  }

  template <std::signed_integral Int>
  std::string to_string(Tropical<Int> x) {
    return x.is_finite() ? std::to_string(x.value()) : std::string("-inf");
  }

  template <std::signed_integral Int>
  std::ostream& operator<<(std::ostream& os, Tropical<Int> x) {
    return os << to_string(x);
  }

  using TropInt = Tropical<std::int64_t>;

  inline constexpr TropInt NEG_INF = TropInt::neg_inf();

}  // namespace tropmon

#endif  // TROPMON_SCALAR_HPP_
