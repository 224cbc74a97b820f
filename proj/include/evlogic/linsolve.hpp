#ifndef EVLOGIC_LINSOLVE_HPP
#define EVLOGIC_LINSOLVE_HPP

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "evlogic/errors.hpp"
#include "evlogic/rational.hpp"

namespace evlogic {

enum class Relation { Equal, LessEqual, GreaterEqual };
enum class Direction { Minimize, Maximize };

template <class Scalar>
struct Term {
  std::size_t var;
  Scalar coef;
};

template <class Scalar>
struct Constraint {
  std::vector<Term<Scalar>> terms;
  Relation relation = Relation::Equal;
  Scalar rhs{0};
};

/// Linear program over variables x_0..x_{V-1}, all implicitly >= 0.
template <class Scalar>
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<Constraint<Scalar>> constraints;
  std::vector<Term<Scalar>> objective;

  /// Throws std::invalid_argument on an out-of-range variable or a variable
  /// repeated within one row.
  void validate() const;
};

template <class Scalar>
struct LpSolution {
  Scalar optimum;
  Vector<Scalar> witness;
  std::size_t pivots = 0;
};

/// Two-phase dense-tableau simplex with Bland's rule. Exact when Scalar is an
/// exact field such as Rational. Throws Infeasible or Unbounded.
template <class Scalar>
LpSolution<Scalar> solve(const LinearProgram<Scalar>& lp, Direction direction);

// ---------------------------------------------------------------------------

template <class Scalar>
void LinearProgram<Scalar>::validate() const {
  std::vector<std::size_t> last_row(variables, static_cast<std::size_t>(-1));
  const auto check = [&](const std::vector<Term<Scalar>>& terms, std::size_t row, const char* what) {
    for (const auto& t : terms) {
      if (t.var >= variables) {
        throw std::invalid_argument(std::string(what) + " references variable " + std::to_string(t.var) +
                                    " of " + std::to_string(variables));
      }
      if (last_row[t.var] == row) {
        throw std::invalid_argument(std::string(what) + " repeats variable " + std::to_string(t.var));
      }
      last_row[t.var] = row;
    }
  };
  for (std::size_t i = 0; i < constraints.size(); ++i) check(constraints[i].terms, i, "constraint");
  check(objective, constraints.size(), "objective");
}

namespace detail {

template <class Scalar>
class Tableau {
 public:
  using Table = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  explicit Tableau(const LinearProgram<Scalar>& lp) : structural_(lp.variables) {
    const std::size_t m = lp.constraints.size();
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    for (const auto& c : lp.constraints) {
      const Relation r = normalized(c).second;
      if (r != Relation::Equal) ++slacks;
      if (r != Relation::LessEqual) ++artificials;
    }
    first_artificial_ = structural_ + slacks;
    columns_ = first_artificial_ + artificials;
    table_ = Table::Constant(static_cast<Eigen::Index>(m + 1), static_cast<Eigen::Index>(columns_ + 1), zero_);
    basis_.assign(m, 0);

    std::size_t next_slack = structural_;
    std::size_t next_artificial = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const auto [flip, relation] = normalized(lp.constraints[i]);
      const auto row = static_cast<Eigen::Index>(i);
      for (const auto& t : lp.constraints[i].terms) {
        table_(row, static_cast<Eigen::Index>(t.var)) = flip ? Scalar(-t.coef) : t.coef;
      }
      table_(row, rhs_col()) = flip ? Scalar(-lp.constraints[i].rhs) : lp.constraints[i].rhs;
      if (relation == Relation::LessEqual) {
        table_(row, static_cast<Eigen::Index>(next_slack)) = Scalar(1);
        basis_[i] = next_slack++;
      } else {
        if (relation == Relation::GreaterEqual) table_(row, static_cast<Eigen::Index>(next_slack++)) = Scalar(-1);
        table_(row, static_cast<Eigen::Index>(next_artificial)) = Scalar(1);
        basis_[i] = next_artificial++;
      }
    }
    // generous cap; Bland's rule cannot cycle so hitting it means a bug
    pivot_limit_ = 50 * (columns_ + m) + 1000;
  }

  LpSolution<Scalar> run(const LinearProgram<Scalar>& lp, Direction direction) {
    phase_one();
    phase_two(lp, direction);
    LpSolution<Scalar> out;
    out.optimum = -table_(cost_row(), rhs_col());
    if (direction == Direction::Maximize) out.optimum = -out.optimum;
    out.witness = Vector<Scalar>::Constant(static_cast<Eigen::Index>(structural_), zero_);
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (basis_[r] < structural_) {
        out.witness(static_cast<Eigen::Index>(basis_[r])) = table_(static_cast<Eigen::Index>(r), rhs_col());
      }
    }
    out.pivots = pivots_;
    return out;
  }

 private:
  static std::pair<bool, Relation> normalized(const Constraint<Scalar>& c) {
    if (!(c.rhs < Scalar(0))) return {false, c.relation};
    switch (c.relation) {
      case Relation::LessEqual: return {true, Relation::GreaterEqual};
      case Relation::GreaterEqual: return {true, Relation::LessEqual};
      default: return {true, Relation::Equal};
    }
  }

  Eigen::Index rhs_col() const { return static_cast<Eigen::Index>(columns_); }
  Eigen::Index cost_row() const { return table_.rows() - 1; }

  void phase_one() {
    auto cost = table_.row(cost_row());
    cost.setConstant(zero_);
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (basis_[r] >= first_artificial_) cost -= table_.row(static_cast<Eigen::Index>(r));
    }
    for (std::size_t j = first_artificial_; j < columns_; ++j) cost(static_cast<Eigen::Index>(j)) = zero_;
    iterate(columns_);
    if (table_(cost_row(), rhs_col()) != zero_) throw Infeasible();
    drive_out_artificials();
  }

  void drive_out_artificials() {
    std::vector<Eigen::Index> keep;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const auto row = static_cast<Eigen::Index>(r);
      if (basis_[r] < first_artificial_) {
        keep.push_back(row);
        continue;
      }
      std::size_t entering = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (table_(row, static_cast<Eigen::Index>(j)) != zero_) {
          entering = j;
          break;
        }
      }
      if (entering < first_artificial_) {
        pivot(r, entering);
        keep.push_back(row);
      }
      // otherwise the row is a linear combination of the others; drop it
    }
    if (keep.size() == basis_.size()) return;
    Table reduced(static_cast<Eigen::Index>(keep.size() + 1), table_.cols());
    std::vector<std::size_t> basis;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      reduced.row(static_cast<Eigen::Index>(k)) = table_.row(keep[k]);
      basis.push_back(basis_[static_cast<std::size_t>(keep[k])]);
    }
    reduced.row(reduced.rows() - 1) = table_.row(cost_row());
    table_ = std::move(reduced);
    basis_ = std::move(basis);
  }

  void phase_two(const LinearProgram<Scalar>& lp, Direction direction) {
    auto cost = table_.row(cost_row());
    cost.setConstant(zero_);
    for (const auto& t : lp.objective) {
      cost(static_cast<Eigen::Index>(t.var)) = direction == Direction::Maximize ? Scalar(-t.coef) : t.coef;
    }
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const Scalar cb = cost(static_cast<Eigen::Index>(basis_[r]));
      if (cb != zero_) cost -= cb * table_.row(static_cast<Eigen::Index>(r));
    }
    iterate(first_artificial_);
  }

  /// Bland's rule over columns [0, allowed).
  void iterate(std::size_t allowed) {
    for (;;) {
      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (table_(cost_row(), static_cast<Eigen::Index>(j)) < zero_) {
          entering = j;
          break;
        }
      }
      if (entering == allowed) return;

      const auto col = static_cast<Eigen::Index>(entering);
      std::size_t leaving = basis_.size();
      Scalar best_ratio;
      for (std::size_t r = 0; r < basis_.size(); ++r) {
        const auto row = static_cast<Eigen::Index>(r);
        const Scalar& a = table_(row, col);
        if (!(a > zero_)) continue;
        Scalar ratio = table_(row, rhs_col()) / a;
        if (leaving == basis_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == basis_.size()) throw Unbounded();
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t leaving, std::size_t entering) {
    if (++pivots_ > pivot_limit_) throw std::logic_error("simplex pivot limit exceeded");
    const auto pr = static_cast<Eigen::Index>(leaving);
    const auto pc = static_cast<Eigen::Index>(entering);
    const Scalar inv = Scalar(1) / table_(pr, pc);
    nonzero_.clear();
    for (Eigen::Index j = 0; j < table_.cols(); ++j) {
      if (table_(pr, j) != zero_) {
        table_(pr, j) *= inv;
        nonzero_.push_back(j);
      }
    }
    for (Eigen::Index r = 0; r < table_.rows(); ++r) {
      if (r == pr || table_(r, pc) == zero_) continue;
      const Scalar factor = table_(r, pc);
      for (Eigen::Index j : nonzero_) table_(r, j) -= factor * table_(pr, j);
    }
    basis_[leaving] = entering;
  }

  const Scalar zero_{0};
  std::size_t structural_;
  std::size_t first_artificial_ = 0;
  std::size_t columns_ = 0;
  Table table_;
  std::vector<std::size_t> basis_;
  std::vector<Eigen::Index> nonzero_;
  std::size_t pivots_ = 0;
  std::size_t pivot_limit_ = 0;
};

}  // namespace detail

template <class Scalar>
LpSolution<Scalar> solve(const LinearProgram<Scalar>& lp, Direction direction) {
  lp.validate();
  detail::Tableau<Scalar> tableau(lp);
  return tableau.run(lp, direction);
}

}  // namespace evlogic

#endif  // EVLOGIC_LINSOLVE_HPP
