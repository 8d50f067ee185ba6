#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Integer>;

IntVec make_vec(std::initializer_list<long long> values);
IntVec make_vec(std::span<const long long> values);
std::string to_string(const IntVec& v);
Integer dot(const IntVec& a, const IntVec& b);
Integer gcd_of(const IntVec& v);
bool is_zero(const IntVec& v);

/// Dense integer matrix, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);
  IntMat(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols = 0);
  static IntMat from_columns(const std::vector<IntVec>& cols, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  IntMat transpose() const;
  IntMat select_columns(std::span<const std::size_t> cols) const;
  IntMat select_rows(std::span<const std::size_t> rows) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  IntVec operator*(const IntVec& v) const;
  IntMat operator*(const IntMat& other) const;
  IntMat operator-() const;
  bool operator==(const IntMat& other) const = default;

  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct HermiteResult {
  IntMat H;  // U * A
  IntMat U;  // unimodular
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: U * A = H with H in row echelon form,
/// pivots positive and entries above each pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMat& A);

struct SmithResult {
  IntMat U, S, V;  // U * A * V = S
  std::size_t rank = 0;
  std::vector<Integer> diagonal() const;
};

/// Smith normal form with nonnegative diagonal d_1 | d_2 | ... .
SmithResult smith_normal_form(const IntMat& A);

std::size_t rank(const IntMat& A);
Integer determinant(const IntMat& A);
bool is_unimodular(const IntMat& A);

/// Lattice basis of {x in Z^cols : A x = 0}. The basis is saturated and
/// returned in Hermite normal form (one vector per row of the HNF).
std::vector<IntVec> kernel_basis(const IntMat& A);

struct Cokernel {
  // Rows 0..free_rank-1 map onto the free part (in Hermite form); each
  // following row i maps onto Z/invariants[i - free_rank].
  IntMat grading;
  std::size_t free_rank = 0;
  std::vector<Integer> invariants;
  bool torsion_free() const { return invariants.empty(); }
};

/// Grading map Z^rows -> Z^k (+) torsion whose kernel is the image of A.
Cokernel cokernel_map(const IntMat& A);

class NoRationalSolution : public std::runtime_error {
 public:
  NoRationalSolution() : std::runtime_error("no rational solution") {}
};

/// Some integer x with A x = b, or nullopt if the system is solvable over Q
/// but not over Z. Throws NoRationalSolution when b is not in the rational
/// image of A.
std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b);

/// Nonnegative integer x with A x = e, searching along x0 + t k for the
/// generator k of ker A. Returns the solution with the smallest feasible t
/// (largest if t is unbounded below). Throws NoRationalSolution when e is
/// outside the rational image of A.
std::optional<IntVec> solve_nonneg_line(const IntMat& A, const IntVec& e, const IntVec& k);

/// Upper bounds of every coordinate over {x >= 0 : A x = b} computed by
/// exact rational simplex. Returns nullopt when some coordinate is
/// unbounded, and an empty vector when the polyhedron is empty.
std::optional<std::vector<Integer>> nonneg_fiber_bounds(const IntMat& A, const IntVec& b);

}  // namespace toric
