#ifndef GROUPK_INTLINALG_HPP_
#define GROUPK_INTLINALG_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace groupk {

  using Integer = mpz_class;

  //! Dense row-major matrix of arbitrary-precision integers.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : _rows(rows), _cols(cols), _entries(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    //! Builds a rows x columns.size() matrix whose j-th column is columns[j].
    static IntMatrix from_columns(std::size_t rows, std::vector<std::vector<long long>> const& columns);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    Integer& operator()(std::size_t i, std::size_t j) {
      return _entries[i * _cols + j];
    }
    Integer const& operator()(std::size_t i, std::size_t j) const {
      return _entries[i * _cols + j];
    }

    std::vector<Integer> const& entries() const noexcept {
      return _entries;
    }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    //! row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, Integer const& factor);
    //! col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, Integer const& factor);
    void negate_row(std::size_t i);

    IntMatrix column_block(std::size_t first, std::size_t count) const;
    //! Horizontal concatenation [*this | other].
    IntMatrix hconcat(IntMatrix const& other) const;
    bool      is_zero() const;

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
    friend bool      operator==(IntMatrix const& a, IntMatrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._entries == b._entries;
    }

   private:
    std::size_t          _rows = 0;
    std::size_t          _cols = 0;
    std::vector<Integer> _entries;
  };

  struct SmithForm {
    IntMatrix U;  // rows x rows, unimodular
    IntMatrix D;  // rows x cols, diagonal with d_1 | d_2 | ...
    IntMatrix V;  // cols x cols, unimodular
    std::size_t rank = 0;

    //! Nonzero diagonal entries d_1 | d_2 | ... | d_rank.
    std::vector<Integer> diagonal() const;
  };

  //! U * A * V == D, computed by elementary row/column operations pivoting
  //! on the entry of minimal nonzero absolute value.
  SmithForm smith_normal_form(IntMatrix const& A);

  //! Isomorphism type Z^rank + Z/t_1 + ... + Z/t_m with 2 <= t_1 | ... | t_m.
  struct AbelianGroup {
    std::size_t          rank = 0;
    std::vector<Integer> invariant_factors;

    static AbelianGroup free(std::size_t rank) {
      return {rank, {}};
    }
    //! Canonicalises an arbitrary list of cyclic orders (0 means Z, 1 is dropped).
    static AbelianGroup from_cyclic_orders(std::size_t rank, std::vector<Integer> orders);

    bool is_trivial() const noexcept {
      return rank == 0 && invariant_factors.empty();
    }
    bool is_free() const noexcept {
      return invariant_factors.empty();
    }

    friend bool operator==(AbelianGroup const&, AbelianGroup const&) = default;
  };

  //! Columns span the integer kernel of A : Z^cols -> Z^rows.
  IntMatrix kernel_basis(IntMatrix const& A);

  //! Z^rows / column span of A.
  AbelianGroup cokernel(IntMatrix const& A);

  //! Z^ambient_rank / span(generators); generators given as columns.
  AbelianGroup quotient_lattice(std::size_t ambient_rank, IntMatrix const& generators);

  AbelianGroup direct_sum(AbelianGroup const& a, AbelianGroup const& b);

  //! "0", "Z", "Z^3 + Z/2 + Z/6", ...
  std::string to_string(AbelianGroup const& g);

}  // namespace groupk

#endif  // GROUPK_INTLINALG_HPP_
