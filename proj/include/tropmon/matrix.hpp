#ifndef TROPMON_MATRIX_HPP_
#define TROPMON_MATRIX_HPP_

#include <Eigen/Core>

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "tropmon/errors.hpp"
#include "tropmon/scalar.hpp"

namespace tropmon {

  //! Square matrix over the integral tropical semiring.
  //!
  //! Entries live in an Eigen matrix of raw integers where the minimum value
  //! of Int encodes -inf. Equality is exact structural equality. The
  //! semiring operations are the free functions below (operator+ is the
  //! entrywise max, operator* the max-plus product).
  template <std::signed_integral Int = std::int64_t>
  class TropicalMatrix {
   public:
    using scalar_type  = Tropical<Int>;
    using storage_type = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    using Index        = Eigen::Index;

    TropicalMatrix() : TropicalMatrix(1) {}

    // n x n matrix with every entry -inf.
    explicit TropicalMatrix(Index n) {
      if (n < 1) {
        throw DimensionError("tropical matrices have dimension >= 1");
      }
      _entries.setConstant(n, n, scalar_type::neg_inf_raw);
    }

    TropicalMatrix(std::initializer_list<std::initializer_list<scalar_type>> rows)
        : TropicalMatrix(static_cast<Index>(rows.size())) {
      Index i = 0;
      for (auto const& row : rows) {
        if (static_cast<Index>(row.size()) != dim()) {
          throw DimensionError("tropical matrix literal is not square");
        }
        Index j = 0;
        for (auto x : row) {
          _entries(i, j++) = x.raw();
        }
        ++i;
      }
    }

    // Wraps raw storage; every entry must be -inf or within the guard.
    static TropicalMatrix from_storage(storage_type entries) {
      if (entries.rows() != entries.cols() || entries.rows() < 1) {
        throw DimensionError("tropical matrices are square with dimension >= 1");
      }
      for (Index i = 0; i < entries.size(); ++i) {
        Int x = entries.data()[i];
        if (x != scalar_type::neg_inf_raw) {
          scalar_type::check(x);
        }
      }
      TropicalMatrix m(entries.rows());
      m._entries = std::move(entries);
      return m;
    }

    static TropicalMatrix zero(Index n) {
      return TropicalMatrix(n);
    }

    static TropicalMatrix identity(Index n) {
      TropicalMatrix m(n);
      m._entries.diagonal().setZero();
      return m;
    }

    [[nodiscard]] Index dim() const noexcept {
      return _entries.rows();
    }

    [[nodiscard]] scalar_type operator()(Index i, Index j) const {
      return scalar_type::from_raw(_entries(i, j));
    }

    void set(Index i, Index j, scalar_type x) {
      _entries(i, j) = x.raw();
    }

    [[nodiscard]] storage_type const& storage() const noexcept {
      return _entries;
    }

    bool operator==(TropicalMatrix const& that) const {
      return dim() == that.dim() && _entries == that._entries;
    }

   private:
    storage_type _entries;
  };

  using TropMatrix = TropicalMatrix<std::int64_t>;

  namespace detail {
    template <std::signed_integral Int>
    void check_same_dim(TropicalMatrix<Int> const& a, TropicalMatrix<Int> const& b) {
      if (a.dim() != b.dim()) {
        throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs "
                             + std::to_string(b.dim()));
      }
    }
  }  // namespace detail

  // Entrywise max.
  template <std::signed_integral Int>
  TropicalMatrix<Int> operator+(TropicalMatrix<Int> const& a, TropicalMatrix<Int> const& b) {
    detail::check_same_dim(a, b);
    return TropicalMatrix<Int>::from_storage(a.storage().cwiseMax(b.storage()));
  }

  // (A * B)_ij = max_k A_ik + B_kj, every finite sum range-checked.
  template <std::signed_integral Int>
  TropicalMatrix<Int> operator*(TropicalMatrix<Int> const& a, TropicalMatrix<Int> const& b) {
    detail::check_same_dim(a, b);
    using T        = Tropical<Int>;
    auto const  n  = a.dim();
    auto const& lhs = a.storage();
    auto const& rhs = b.storage();
    typename TropicalMatrix<Int>::storage_type out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        Int best = T::neg_inf_raw;
        for (Eigen::Index k = 0; k < n; ++k) {
          Int x = lhs(i, k);
          Int y = rhs(k, j);
          if (x != T::neg_inf_raw && y != T::neg_inf_raw && x + y > best) {
            best = x + y;
          }
        }
        if (best != T::neg_inf_raw) {
          T::check(best);
        }
        out(i, j) = best;
      }
    }
    return TropicalMatrix<Int>::from_storage(std::move(out));
  }

  template <std::signed_integral Int>
  TropicalMatrix<Int> oplus(TropicalMatrix<Int> const& a, TropicalMatrix<Int> const& b) {
    return a + b;
  }

  template <std::signed_integral Int>
  TropicalMatrix<Int> otimes(TropicalMatrix<Int> const& a, TropicalMatrix<Int> const& b) {
    return a * b;
  }

  // Every power A^0 = I, A^1, ..., A^m by iterated multiplication.
  template <std::signed_integral Int>
  std::vector<TropicalMatrix<Int>> powers(TropicalMatrix<Int> const& a, std::size_t m) {
    std::vector<TropicalMatrix<Int>> out;
    out.reserve(m + 1);
    out.push_back(TropicalMatrix<Int>::identity(a.dim()));
    for (std::size_t i = 1; i <= m; ++i) {
      out.push_back(out.back() * a);
    }
    return out;
  }

  template <std::signed_integral Int>
  TropicalMatrix<Int> power(TropicalMatrix<Int> const& a, std::size_t m) {
    auto result = TropicalMatrix<Int>::identity(a.dim());
    for (std::size_t i = 0; i < m; ++i) {
      result = result * a;
    }
    return result;
  }

  template <std::signed_integral Int>
  TropicalMatrix<Int> transpose(TropicalMatrix<Int> const& a) {
    return TropicalMatrix<Int>::from_storage(a.storage().transpose());
  }

  // Reflection about the anti-diagonal: out(i, j) = a(n-1-j, n-1-i).
  template <std::signed_integral Int>
  TropicalMatrix<Int> anti_transpose(TropicalMatrix<Int> const& a) {
    return TropicalMatrix<Int>::from_storage(a.storage().transpose().reverse());
  }

  template <std::signed_integral Int>
  bool is_upper_triangular(TropicalMatrix<Int> const& a) {
    auto const& m = a.storage();
    for (Eigen::Index i = 1; i < a.dim(); ++i) {
      for (Eigen::Index j = 0; j < i; ++j) {
        if (m(i, j) != Tropical<Int>::neg_inf_raw) {
          return false;
        }
      }
    }
    return true;
  }

  template <std::signed_integral Int>
  std::string to_string(TropicalMatrix<Int> const& a) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
      out += i == 0 ? "[" : ", [";
      for (Eigen::Index j = 0; j < a.dim(); ++j) {
        if (j != 0) {
          out += ", ";
        }
        out += to_string(a(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

  template <std::signed_integral Int>
  std::ostream& operator<<(std::ostream& os, TropicalMatrix<Int> const& a) {
    return os << to_string(a);
  }

}  // namespace tropmon

template <std::signed_integral Int>
struct std::hash<tropmon::TropicalMatrix<Int>> {
  std::size_t operator()(tropmon::TropicalMatrix<Int> const& a) const noexcept {
    std::size_t seed = static_cast<std::size_t>(a.dim());
    auto const& m    = a.storage();
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      seed ^= std::hash<Int>{}(m.data()[i]) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }
};

#endif  // TROPMON_MATRIX_HPP_
