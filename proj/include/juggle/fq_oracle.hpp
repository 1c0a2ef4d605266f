//
// fq_oracle.hpp
//
// Matrices over Z/p and the juggling states they determine. A full-rank
// b x N matrix has a pivot state (its reduced row-echelon pivot columns)
// and a flag pivot state (its partial permutation normal form under
// downward row operations and rightward column operations). Exhaustive
// enumeration over all matrices gives exact fractions to compare with the
// stationary weights, and prepending a random column gives exact
// transition laws to compare with the backward chains.
//

#pragma once

#include "juggle/chain_basic.hpp"
#include "juggle/chain_flag.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace juggle {

class FqMatrix {
 public:
  // Zero matrix. p must be 2, 3 or 5.
  FqMatrix(int p, int rows, int cols);

  static FqMatrix from_rows(int p, const std::vector<std::vector<int>>& rows);

  int p() const { return _p; }
  int rows() const { return _rows; }
  int cols() const { return _cols; }

  int at(int i, int j) const { return _a[index(i, j)]; }
  void set(int i, int j, int value);

  int rank() const;
  // Rank of the top `i` rows restricted to the left `j` columns.
  int northwest_rank(int i, int j) const;

  // [c M] for a column c of length rows().
  FqMatrix prepend_column(const std::vector<int>& c) const;

  // Row i += factor * row src, and column j += factor * column src.
  void add_row(int i, int src, int factor);
  void add_column(int j, int src, int factor);
  void scale_row(int i, int factor);
  void scale_column(int j, int factor);

  bool operator==(const FqMatrix&) const = default;

 private:
  size_t index(int i, int j) const
  {
    return static_cast<size_t>(i) * static_cast<size_t>(_cols) +
           static_cast<size_t>(j);
  }

  int _p;
  int _rows;
  int _cols;
  std::vector<int> _a;  // row-major
};

// Pivot columns of the reduced row-echelon form; empty when rank < rows.
std::optional<JugglingState> pivot_state(const FqMatrix& m);

// Label i (1-based row) at position j where the northwest rank function
// jumps; empty when rank < rows.
std::optional<FlagState> flag_pivot_state(const FqMatrix& m);

// As flag_pivot_state with rows relabeled by group: the first group-size
// rows get the smallest group label, and so on.
std::optional<FlagState> group_pivot_state(const FqMatrix& m,
                                           const LabelGroups& groups);

// |GL_b(F_p)|
Integer gl_order(int b, int p);

constexpr std::uint64_t kDefaultMatrixBudget = std::uint64_t{1} << 24;

// Outcome counts over every b x N matrix over F_p.
template <class State>
struct Census {
  std::map<State, std::uint64_t> counts;
  std::uint64_t deficient = 0;
  std::uint64_t total = 0;

  Rational fraction(const State& s) const
  {
    const auto it = counts.find(s);
    return it == counts.end() ? Rational(0) : Rational(it->second) / total;
  }
};

// Matrices are visited in column-lexicographic order: the entries of
// column 0 are the most significant digits. Work is split across `workers`
// threads (0 picks a default); counts do not depend on the split.
// Throws ResourceLimit when p^{bN} exceeds the budget.
Census<JugglingState> pivot_census(int b, int n, int p,
                                   std::uint64_t budget = kDefaultMatrixBudget,
                                   unsigned workers = 0);
Census<FlagState> flag_census(int b, int n, int p,
                              std::uint64_t budget = kDefaultMatrixBudget,
                              unsigned workers = 0);
Census<FlagState> group_census(const LabelGroups& groups, int n, int p,
                               std::uint64_t budget = kDefaultMatrixBudget,
                               unsigned workers = 0);

struct FractionCheck {
  Rational fraction;  // exhaustive
  Rational formula;
  bool match = false;
};

// Predicted fractions of matrices with a given pivot state.
// |GL_b| p^{-b^2} p^{-l}
Rational pivot_fraction_formula(int p, const JugglingState& target);
// (1 - 1/p)^b p^{-l}
Rational flag_fraction_formula(int p, const FlagState& target);
// group_prefactor p^{-l}
Rational group_fraction_formula(const LabelGroups& groups, int p,
                                const FlagState& target);

// Exhaustive fraction against the formula.
FractionCheck pivot_fraction_exhaustive(
    int b, int n, int p, const JugglingState& target,
    std::uint64_t budget = kDefaultMatrixBudget);

FractionCheck flag_fraction_exhaustive(
    int b, int n, int p, const FlagState& target,
    std::uint64_t budget = kDefaultMatrixBudget);

FractionCheck group_fraction_exhaustive(
    const LabelGroups& groups, int n, int p, const FlagState& target,
    std::uint64_t budget = kDefaultMatrixBudget);

// Law of the pivot state of [c M] over all p^b columns c. M must have full
// row rank.
TransitionDist column_prepend_dist(const FqMatrix& m);
FlagDist flag_column_prepend_dist(const FqMatrix& m);

// Every full-rank b x N matrix, in column-lexicographic order.
std::vector<FqMatrix> full_rank_matrices(int b, int n, int p,
                                         std::uint64_t budget = kDefaultMatrixBudget);

}  // namespace juggle
