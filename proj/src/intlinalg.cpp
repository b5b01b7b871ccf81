#include "groupk/intlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace groupk {

  IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : _rows(rows.size()), _cols(rows.size() == 0 ? 0 : rows.begin()->size()) {
    _entries.reserve(_rows * _cols);
    for (auto const& row : rows) {
      if (row.size() != _cols) {
        throw std::invalid_argument("IntMatrix: ragged initializer");
      }
      for (long x : row) {
        _entries.emplace_back(x);
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      I(i, i) = 1;
    }
    return I;
  }

  IntMatrix IntMatrix::from_columns(std::size_t rows,
                                    std::vector<std::vector<long long>> const& columns) {
    IntMatrix M(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) {
        throw std::invalid_argument("IntMatrix::from_columns: column length mismatch");
      }
      for (std::size_t i = 0; i < rows; ++i) {
        M(i, j) = static_cast<long>(columns[j][i]);
      }
    }
    return M;
  }

  void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t j = 0; j < _cols; ++j) {
      std::swap((*this)(a, j), (*this)(b, j));
    }
  }

  void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t i = 0; i < _rows; ++i) {
      std::swap((*this)(i, a), (*this)(i, b));
    }
  }

  void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Integer const& factor) {
    for (std::size_t j = 0; j < _cols; ++j) {
      (*this)(dst, j) += factor * (*this)(src, j);
    }
  }

  void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Integer const& factor) {
    for (std::size_t i = 0; i < _rows; ++i) {
      (*this)(i, dst) += factor * (*this)(i, src);
    }
  }

  void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < _cols; ++j) {
      (*this)(i, j) = -(*this)(i, j);
    }
  }

  IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
    IntMatrix out(_rows, count);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        out(i, j) = (*this)(i, first + j);
      }
    }
    return out;
  }

  IntMatrix IntMatrix::hconcat(IntMatrix const& other) const {
    if (other._rows != _rows) {
      throw std::invalid_argument("IntMatrix::hconcat: row count mismatch");
    }
    IntMatrix out(_rows, _cols + other._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        out(i, j) = (*this)(i, j);
      }
      for (std::size_t j = 0; j < other._cols; ++j) {
        out(i, _cols + j) = other(i, j);
      }
    }
    return out;
  }

  bool IntMatrix::is_zero() const {
    for (auto const& x : _entries) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a._cols != b._rows) {
      throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    }
    IntMatrix c(a._rows, b._cols);
    for (std::size_t i = 0; i < a._rows; ++i) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b._cols; ++j) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // Smith normal form
  ////////////////////////////////////////////////////////////////////////

  std::vector<Integer> SmithForm::diagonal() const {
    std::vector<Integer> d;
    d.reserve(rank);
    for (std::size_t t = 0; t < rank; ++t) {
      d.push_back(D(t, t));
    }
    return d;
  }

  SmithForm smith_normal_form(IntMatrix const& A) {
    std::size_t const m = A.rows();
    std::size_t const n = A.cols();
    SmithForm         s{IntMatrix::identity(m), A, IntMatrix::identity(n), 0};
    IntMatrix&        D = s.D;

    // Row operations are mirrored on U, column operations on V, so U*A*V == D
    // holds after every step.
    auto row_swap = [&](std::size_t a, std::size_t b) {
      D.swap_rows(a, b);
      s.U.swap_rows(a, b);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
      D.swap_cols(a, b);
      s.V.swap_cols(a, b);
    };
    auto row_add = [&](std::size_t dst, std::size_t src, Integer const& f) {
      D.add_row_multiple(dst, src, f);
      s.U.add_row_multiple(dst, src, f);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, Integer const& f) {
      D.add_col_multiple(dst, src, f);
      s.V.add_col_multiple(dst, src, f);
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      // pivot: minimal nonzero |entry| in the trailing block
      bool        found = false;
      std::size_t pi = t, pj = t;
      Integer     best;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) != 0 && (!found || abs(D(i, j)) < best)) {
            found = true;
            best  = abs(D(i, j));
            pi    = i;
            pj    = j;
          }
        }
      }
      if (!found) {
        break;
      }
      row_swap(t, pi);
      col_swap(t, pj);

      while (true) {
        // clear column t and row t by division with remainder
        for (std::size_t i = t + 1; i < m; ++i) {
          if (D(i, t) != 0) {
            Integer q = D(i, t) / D(t, t);
            row_add(i, t, -q);
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (D(t, j) != 0) {
            Integer q = D(t, j) / D(t, t);
            col_add(j, t, -q);
          }
        }
        // a nonzero remainder is strictly smaller than the pivot: promote it
        bool moved = false;
        for (std::size_t i = t + 1; i < m && !moved; ++i) {
          if (D(i, t) != 0) {
            row_swap(t, i);
            moved = true;
          }
        }
        for (std::size_t j = t + 1; j < n && !moved; ++j) {
          if (D(t, j) != 0) {
            col_swap(t, j);
            moved = true;
          }
        }
        if (moved) {
          continue;
        }
        // enforce d_t | every remaining entry
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i) {
          for (std::size_t j = t + 1; j < n && !fixed; ++j) {
            if (D(i, j) % D(t, t) != 0) {
              row_add(t, i, 1);
              fixed = true;
            }
          }
        }
        if (!fixed) {
          break;
        }
      }
      if (D(t, t) < 0) {
        D.negate_row(t);
        s.U.negate_row(t);
      }
      s.rank = t + 1;
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelian groups
  ////////////////////////////////////////////////////////////////////////

  AbelianGroup AbelianGroup::from_cyclic_orders(std::size_t rank, std::vector<Integer> orders) {
    std::vector<Integer> torsion;
    for (auto& x : orders) {
      x = abs(x);
      if (x == 0) {
        ++rank;
      } else if (x != 1) {
        torsion.push_back(std::move(x));
      }
    }
    // (x_i, x_j) -> (gcd, lcm) over all pairs yields the divisibility chain
    for (std::size_t i = 0; i < torsion.size(); ++i) {
      for (std::size_t j = i + 1; j < torsion.size(); ++j) {
        Integer g = gcd(torsion[i], torsion[j]);
        Integer l = torsion[i] / g * torsion[j];
        torsion[i] = std::move(g);
        torsion[j] = std::move(l);
      }
    }
    std::erase_if(torsion, [](Integer const& x) { return x == 1; });
    return {rank, std::move(torsion)};
  }

  IntMatrix kernel_basis(IntMatrix const& A) {
    auto s = smith_normal_form(A);
    return s.V.column_block(s.rank, A.cols() - s.rank);
  }

  AbelianGroup cokernel(IntMatrix const& A) {
    auto s = smith_normal_form(A);
    AbelianGroup g{A.rows() - s.rank, {}};
    for (auto& d : s.diagonal()) {
      if (d != 1) {
        g.invariant_factors.push_back(d);
      }
    }
    return g;
  }

  AbelianGroup quotient_lattice(std::size_t ambient_rank, IntMatrix const& generators) {
    if (generators.cols() == 0) {
      return AbelianGroup::free(ambient_rank);
    }
    if (generators.rows() != ambient_rank) {
      throw std::invalid_argument("quotient_lattice: generator length "
                                  + std::to_string(generators.rows()) + " != ambient rank "
                                  + std::to_string(ambient_rank));
    }
    return cokernel(generators);
  }

  AbelianGroup direct_sum(AbelianGroup const& a, AbelianGroup const& b) {
    std::vector<Integer> orders = a.invariant_factors;
    orders.insert(orders.end(), b.invariant_factors.begin(), b.invariant_factors.end());
    return AbelianGroup::from_cyclic_orders(a.rank + b.rank, std::move(orders));
  }

  std::string to_string(AbelianGroup const& g) {
    if (g.is_trivial()) {
      return "0";
    }
    std::string out;
    if (g.rank > 0) {
      out = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
    }
    for (auto const& t : g.invariant_factors) {
      if (!out.empty()) {
        out += " + ";
      }
      out += "Z/" + t.get_str();
    }
    return out;
  }

}  // namespace groupk
