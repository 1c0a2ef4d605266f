//
// fq_oracle.cpp
//

#include "juggle/fq_oracle.hpp"

#include "juggle/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace juggle {

namespace {

int mod(int a, int p)
{
  const int r = a % p;
  return r < 0 ? r + p : r;
}

int inverse(int a, int p)
{
  // Fermat: a^{p-2}
  int result = 1;
  for (int k = 0; k < p - 2; ++k) {
    result = result * a % p;
  }
  return result;
}

// Left-to-right elimination on the top `rows` rows. prefix_rank[j] is the
// rank of the left j columns; pivots lists the pivot columns.
struct Elimination {
  std::vector<int> prefix_rank;
  std::vector<int> pivots;
};

Elimination eliminate(const FqMatrix& m, int rows)
{
  const int p = m.p();
  std::vector<std::vector<int>> a(static_cast<size_t>(rows),
                                  std::vector<int>(static_cast<size_t>(m.cols())));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    }
  }
  Elimination e;
  e.prefix_rank.assign(static_cast<size_t>(m.cols()) + 1, 0);
  int rank = 0;
  for (int j = 0; j < m.cols(); ++j) {
    const auto col = static_cast<size_t>(j);
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (a[static_cast<size_t>(i)][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot >= 0) {
      std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(rank)]);
      auto& prow = a[static_cast<size_t>(rank)];
      const int inv = inverse(prow[col], p);
      for (auto& x : prow) {
        x = x * inv % p;
      }
      for (int i = 0; i < rows; ++i) {
        auto& row = a[static_cast<size_t>(i)];
        if (i != rank && row[col] != 0) {
          const int f = row[col];
          for (size_t k = 0; k < row.size(); ++k) {
            row[k] = mod(row[k] - f * prow[k], p);
          }
        }
      }
      e.pivots.push_back(j);
      ++rank;
    }
    e.prefix_rank[col + 1] = rank;
  }
  return e;
}

std::optional<FlagState> labelled_pivot_state(const FqMatrix& m,
                                              const std::vector<int>& row_label)
{
  const int b = m.rows();
  const int n = m.cols();
  std::vector<std::vector<int>> r(static_cast<size_t>(b) + 1);
  r[0].assign(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= b; ++i) {
    r[static_cast<size_t>(i)] = eliminate(m, i).prefix_rank;
  }
  if (r[static_cast<size_t>(b)][static_cast<size_t>(n)] < b) {
    return std::nullopt;
  }
  std::vector<int> cells(static_cast<size_t>(n), FlagState::kEmpty);
  for (size_t i = 1; i <= static_cast<size_t>(b); ++i) {
    for (size_t j = 1; j <= static_cast<size_t>(n); ++j) {
      if (r[i][j] - r[i - 1][j] - r[i][j - 1] + r[i - 1][j - 1] == 1) {
        cells[j - 1] = row_label[i - 1];
      }
    }
  }
  return FlagState(std::move(cells));
}

std::uint64_t checked_power(int p, int exponent, std::uint64_t budget)
{
  std::uint64_t total = 1;
  for (int k = 0; k < exponent; ++k) {
    if (total > budget / static_cast<std::uint64_t>(p)) {
      throw ResourceLimit("p^" + std::to_string(exponent) +
                          " matrices exceed the budget of " +
                          std::to_string(budget));
    }
    total *= static_cast<std::uint64_t>(p);
  }
  return total;
}

FqMatrix decode(std::uint64_t index, int b, int n, int p)
{
  FqMatrix m(p, b, n);
  for (int j = n - 1; j >= 0; --j) {
    for (int i = b - 1; i >= 0; --i) {
      m.set(i, j, static_cast<int>(index % static_cast<std::uint64_t>(p)));
      index /= static_cast<std::uint64_t>(p);
    }
  }
  return m;
}

unsigned pick_workers(unsigned requested, std::uint64_t total)
{
  if (requested > 0) {
    return requested;
  }
  if (total < 4096) {
    return 1;
  }
  return std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
}

template <class State>
Census<State> run_census(
    int b, int n, int p, std::uint64_t budget, unsigned workers,
    const std::function<std::optional<State>(const FqMatrix&)>& classify)
{
  if (b < 1 || n < 0) {
    throw std::invalid_argument("census needs b >= 1 and N >= 0");
  }
  const std::uint64_t total = checked_power(p, b * n, budget);
  workers = pick_workers(workers, total);
  std::vector<Census<State>> parts(workers);
  auto run = [&](unsigned w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    auto& part = parts[w];
    for (std::uint64_t k = lo; k < hi; ++k) {
      auto s = classify(decode(k, b, n, p));
      if (s) {
        ++part.counts[*s];
      } else {
        ++part.deficient;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back(run, w);
    }
    for (auto& t : threads) {
      t.join();
    }
  }
  Census<State> census;
  census.total = total;
  for (const auto& part : parts) {
    census.deficient += part.deficient;
    for (const auto& [s, c] : part.counts) {
      census.counts[s] += c;
    }
  }
  return census;
}

std::vector<int> group_row_labels(const LabelGroups& groups)
{
  std::vector<int> labels;
  for (const auto& [label, count] : groups.groups) {
    labels.insert(labels.end(), static_cast<size_t>(count), label);
  }
  return labels;
}

template <class Dist, class Classify>
Dist prepend_dist(const FqMatrix& m, Classify classify)
{
  if (m.rank() < m.rows()) {
    throw std::invalid_argument("column prepend needs a full-rank matrix");
  }
  const int b = m.rows();
  const int p = m.p();
  std::uint64_t count = 1;
  for (int i = 0; i < b; ++i) {
    count *= static_cast<std::uint64_t>(p);
  }
  const Rational each = Rational(1) / count;
  Dist dist;
  std::vector<int> c(static_cast<size_t>(b));
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t x = k;
    for (int i = b - 1; i >= 0; --i) {
      c[static_cast<size_t>(i)] = static_cast<int>(x % static_cast<std::uint64_t>(p));
      x /= static_cast<std::uint64_t>(p);
    }
    dist.add(*classify(m.prepend_column(c)), each);
  }
  return dist;
}

}  // namespace

FqMatrix::FqMatrix(int p, int rows, int cols)
    : _p(p), _rows(rows), _cols(cols)
{
  if (p != 2 && p != 3 && p != 5) {
    throw std::invalid_argument("modulus must be 2, 3 or 5");
  }
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("negative matrix dimension");
  }
  _a.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
}

FqMatrix FqMatrix::from_rows(int p, const std::vector<std::vector<int>>& rows)
{
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  FqMatrix m(p, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (static_cast<int>(row.size()) != cols) {
      throw std::invalid_argument("ragged matrix rows");
    }
    for (int j = 0; j < cols; ++j) {
      m.set(i, j, row[static_cast<size_t>(j)]);
    }
  }
  return m;
}

void FqMatrix::set(int i, int j, int value)
{
  _a[index(i, j)] = mod(value, _p);
}

int FqMatrix::rank() const
{
  return eliminate(*this, _rows).prefix_rank.back();
}

int FqMatrix::northwest_rank(int i, int j) const
{
  return eliminate(*this, i).prefix_rank[static_cast<size_t>(j)];
}

FqMatrix FqMatrix::prepend_column(const std::vector<int>& c) const
{
  if (static_cast<int>(c.size()) != _rows) {
    throw std::invalid_argument("column length does not match row count");
  }
  FqMatrix out(_p, _rows, _cols + 1);
  for (int i = 0; i < _rows; ++i) {
    out.set(i, 0, c[static_cast<size_t>(i)]);
    for (int j = 0; j < _cols; ++j) {
      out.set(i, j + 1, at(i, j));
    }
  }
  return out;
}

void FqMatrix::add_row(int i, int src, int factor)
{
  for (int j = 0; j < _cols; ++j) {
    set(i, j, at(i, j) + factor * at(src, j));
  }
}

void FqMatrix::add_column(int j, int src, int factor)
{
  for (int i = 0; i < _rows; ++i) {
    set(i, j, at(i, j) + factor * at(i, src));
  }
}

void FqMatrix::scale_row(int i, int factor)
{
  for (int j = 0; j < _cols; ++j) {
    set(i, j, at(i, j) * factor);
  }
}

void FqMatrix::scale_column(int j, int factor)
{
  for (int i = 0; i < _rows; ++i) {
    set(i, j, at(i, j) * factor);
  }
}

std::optional<JugglingState> pivot_state(const FqMatrix& m)
{
  Elimination e = eliminate(m, m.rows());
  if (static_cast<int>(e.pivots.size()) < m.rows()) {
    return std::nullopt;
  }
  return JugglingState(std::move(e.pivots));
}

std::optional<FlagState> flag_pivot_state(const FqMatrix& m)
{
  std::vector<int> labels(static_cast<size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    labels[static_cast<size_t>(i)] = i + 1;
  }
  return labelled_pivot_state(m, labels);
}

std::optional<FlagState> group_pivot_state(const FqMatrix& m,
                                           const LabelGroups& groups)
{
  if (groups.balls() != m.rows()) {
    throw std::invalid_argument("group sizes must sum to the row count");
  }
  return labelled_pivot_state(m, group_row_labels(groups));
}

Integer gl_order(int b, int p)
{
  if (b < 1) {
    throw std::invalid_argument("gl_order needs b >= 1");
  }
  const Integer pb = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(b));
  Integer order = 1;
  Integer pi = 1;
  for (int i = 0; i < b; ++i) {
    order *= pb - pi;
    pi *= p;
  }
  return order;
}

Census<JugglingState> pivot_census(int b, int n, int p, std::uint64_t budget,
                                   unsigned workers)
{
  return run_census<JugglingState>(b, n, p, budget, workers, pivot_state);
}

Census<FlagState> flag_census(int b, int n, int p, std::uint64_t budget,
                              unsigned workers)
{
  return run_census<FlagState>(b, n, p, budget, workers, flag_pivot_state);
}

Census<FlagState> group_census(const LabelGroups& groups, int n, int p,
                               std::uint64_t budget, unsigned workers)
{
  return run_census<FlagState>(
      groups.balls(), n, p, budget, workers,
      [&groups](const FqMatrix& m) { return group_pivot_state(m, groups); });
}

Rational pivot_fraction_formula(int p, const JugglingState& target)
{
  const int b = target.balls();
  return Rational(gl_order(b, p)) * power(Rational(p), -b * b) *
         power(Rational(p), -inversions(target));
}

Rational flag_fraction_formula(int p, const FlagState& target)
{
  return power(1 - Rational(1, p), target.balls()) *
         power(Rational(p), -inversions(target));
}

Rational group_fraction_formula(const LabelGroups& groups, int p,
                                const FlagState& target)
{
  return group_prefactor(groups, Rational(p)) *
         power(Rational(p), -inversions(target));
}

FractionCheck pivot_fraction_exhaustive(int b, int n, int p,
                                        const JugglingState& target,
                                        std::uint64_t budget)
{
  if (target.balls() != b || (b > 0 && target.last() >= n)) {
    throw std::invalid_argument("target " + target.to_string() +
                                " does not fit a " + std::to_string(b) + "x" +
                                std::to_string(n) + " matrix");
  }
  FractionCheck check;
  check.fraction = pivot_census(b, n, p, budget).fraction(target);
  check.formula = pivot_fraction_formula(p, target);
  check.match = check.fraction == check.formula;
  return check;
}

FractionCheck flag_fraction_exhaustive(int b, int n, int p,
                                       const FlagState& target,
                                       std::uint64_t budget)
{
  if (target.balls() != b || target.size() > n) {
    throw std::invalid_argument("target " + target.to_string() +
                                " does not fit the matrix shape");
  }
  FractionCheck check;
  check.fraction = flag_census(b, n, p, budget).fraction(target);
  check.formula = flag_fraction_formula(p, target);
  check.match = check.fraction == check.formula;
  return check;
}

FractionCheck group_fraction_exhaustive(const LabelGroups& groups, int n,
                                        int p, const FlagState& target,
                                        std::uint64_t budget)
{
  if (target.labels() != group_row_labels(groups) || target.size() > n) {
    throw std::invalid_argument("target " + target.to_string() +
                                " does not fit the groups and matrix shape");
  }
  FractionCheck check;
  check.fraction = group_census(groups, n, p, budget).fraction(target);
  check.formula = group_fraction_formula(groups, p, target);
  check.match = check.fraction == check.formula;
  return check;
}

TransitionDist column_prepend_dist(const FqMatrix& m)
{
  return prepend_dist<TransitionDist>(m, pivot_state);
}

FlagDist flag_column_prepend_dist(const FqMatrix& m)
{
  return prepend_dist<FlagDist>(m, flag_pivot_state);
}

std::vector<FqMatrix> full_rank_matrices(int b, int n, int p,
                                         std::uint64_t budget)
{
  const std::uint64_t total = checked_power(p, b * n, budget);
  std::vector<FqMatrix> out;
  for (std::uint64_t k = 0; k < total; ++k) {
    FqMatrix m = decode(k, b, n, p);
    if (m.rank() == b) {
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace juggle
