#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bredon {

using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  explicit Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind(std::move(kind)) {}
  std::string kind;
};

/// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw Error("BadShape", "entry count does not match dimensions");
  }

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const = default;

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;

  IntMatrix transpose() const;
  bool is_zero() const;
  IntMatrix column(std::size_t j) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

/// Canonical invariant-factor data of a f.g. abelian group:
/// free rank plus torsion orders d1 | d2 | ... with each di >= 2.
struct AbelianGroupInvariants {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianGroupInvariants& o) const = default;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

struct HermiteResult {
  IntMatrix h;  // row echelon, pivots positive, entries above pivots in [0, pivot)
  IntMatrix u;  // unimodular, u * a = h
};

/// Row-style Hermite normal form by exact integer row reduction.
HermiteResult hermite_normal_form(const IntMatrix& a);

struct SmithResult {
  IntMatrix d;  // diagonal, d1 | d2 | ..., di >= 0
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular, u * a * v = d
};

SmithResult smith_normal_form(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);

/// Columns form the canonical Z-basis of { x : a*x = 0 }, obtained from the
/// HNF of the transposed system and re-normalized so the basis itself is in
/// Hermite form (first nonzero entry of every column positive).
IntMatrix kernel_basis(const IntMatrix& a);

/// Invariants of Z^rows / column-span(a).
AbelianGroupInvariants cokernel_invariants(const IntMatrix& a);

/// Exact solve a*x = b over Z, columnwise; nullopt when no integer solution.
std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b);

/// Solve a*x = b modulo the column span of rels: finds x with
/// a*x + rels*y = b for some y.  Returns only x.
std::optional<IntMatrix> solve_mod(const IntMatrix& a, const IntMatrix& rels,
                                   const IntMatrix& b);

/// True when every column of b lies in the column span of a over Z.
bool in_span(const IntMatrix& a, const IntMatrix& b);

bool is_unimodular(const IntMatrix& u);

}  // namespace bredon
