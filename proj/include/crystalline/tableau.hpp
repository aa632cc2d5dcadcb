#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystalline/partition.hpp"

namespace crystalline {

// Letters of the alphabet n̄ < ... < 1̄ (< 0) < 1 < ... < n are encoded as
// -k for k̄, 0 for the zero letter (type B only) and k for k. In type D the
// letters 1 and -1 are incomparable; everything else follows integer order.
using Letter = int;

bool letter_leq(Letter x, Letter y, LieType t);
bool letter_less(Letter x, Letter y, LieType t);
std::string letter_str(Letter x);  // "-3", "0", "2"
std::vector<Letter> alphabet(LieType t, int n);

// x directly above y in a column.
bool column_step_ok(Letter x, Letter y, LieType t);
// x directly left of y in a row.
bool row_step_ok(Letter x, Letter y, LieType t);

// Row lengths of a (generalized) partition diagram; when colored is set the
// last row (row n) carries the coloring of a negative last part.
struct TableauShape {
  std::vector<int> rows;
  bool colored = false;

  TableauShape() = default;
  explicit TableauShape(const Partition& p);
  explicit TableauShape(const GenPartition& g);

  int num_columns() const { return rows.empty() ? 0 : rows[0]; }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int cells() const;
  std::vector<int> column_heights() const;
  // Signed parts: the last part negated when colored.
  std::vector<int> signed_parts() const;
  std::string str() const;

  auto operator<=>(const TableauShape&) const = default;
  bool operator==(const TableauShape&) const = default;
};

using Column = std::vector<Letter>;

enum class ReadingOrder {
  RightToLeftTopDown,  // columns from the right, each read top to bottom
  LeftToRightBottomUp  // columns from the left, each read bottom to top
};

class KNTableau {
 public:
  KNTableau() = default;
  KNTableau(TableauShape shape, LieType type, int rank, std::vector<Column> columns);
  static KNTableau from_rows(TableauShape shape, LieType type, int rank,
                             const std::vector<std::vector<Letter>>& rows);

  const TableauShape& shape() const { return shape_; }
  LieType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<Column>& columns() const { return columns_; }
  // 1-based row and column.
  Letter at(int row, int col) const { return columns_[col - 1][row - 1]; }
  std::vector<std::vector<Letter>> rows() const;

  std::vector<Letter> reading_word(ReadingOrder order) const;
  // Inverse of reading_word for this shape.
  KNTableau with_word(const std::vector<Letter>& word, ReadingOrder order) const;
  std::vector<int> weight() const;  // length rank

  // Canonical serialization; also used as vertex identity.
  std::string str() const;

  auto operator<=>(const KNTableau& o) const { return columns_ <=> o.columns_; }
  bool operator==(const KNTableau& o) const { return columns_ == o.columns_ && shape_ == o.shape_; }

 private:
  TableauShape shape_;
  LieType type_ = LieType::C;
  int rank_ = 0;
  std::vector<Column> columns_;
};

std::vector<int> letter_weight(Letter x, int n);

// Throws std::invalid_argument on letters outside the alphabet.
bool n_admissible(const Column& col, int n, LieType t);

enum class FullColumnParity {
  RowIndex,      // 1 in row k forces k odd (even for a colored shape); 1̄ the opposite
  RankRelative   // 1̄ in row k forces n-k even (odd for a colored shape); 1 the opposite
};

struct KnOptions {
  FullColumnParity parity = FullColumnParity::RowIndex;
  // Second configuration pattern of (c-1)/(b-1)/(d-3): the last cell is read in
  // row s of column j+1 (false) or literally in row r (true).
  bool second_pattern_literal = false;
  // Parity in (d-6) measured by s-q+1 as printed instead of r-q.
  bool d6_literal = false;
};

struct KnReport {
  bool ok = true;
  std::string clause;  // e.g. "(d-6)", "semistandard", "admissible"
  std::string detail;
  explicit operator bool() const { return ok; }
};

KnReport kn_check_column(const Column& col, const TableauShape& shape, int col_index, LieType t,
                         int n, const KnOptions& opts = {});
KnReport kn_check_pair(const Column& left, const Column& right, LieType t, int n,
                       const KnOptions& opts = {});
KnReport kn_validate(const KNTableau& T, const KnOptions& opts = {});

KNTableau t_lambda(const TableauShape& shape, LieType t, int n);

class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every KN tableau of the shape, sorted by columns.
std::vector<KNTableau> enumerate_kn(const TableauShape& shape, LieType t, int n,
                                    const KnOptions& opts = {}, std::size_t cap = 1'000'000);

// Strictly increasing (per type) admissible columns of the given height.
std::vector<Column> admissible_columns(int height, LieType t, int n);

}  // namespace crystalline
