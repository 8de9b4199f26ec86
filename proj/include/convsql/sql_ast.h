// Copyright 2026 The convsql Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Canonical syntax tree for the single-block SQL dialect used by the
// context-dependent text-to-SQL benchmarks: one SELECT block over an inner
// join of tables, optional WHERE / GROUP BY / HAVING / ORDER BY / LIMIT, and
// at most one INTERSECT / UNION / EXCEPT per block (chains nest to the right).
// Every column reference is bound to a schema column id; table aliases do not
// survive parsing.

#ifndef CONVSQL_SQL_AST_H_
#define CONVSQL_SQL_AST_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "absl/strings/string_view.h"
#include "convsql/schema.h"

namespace convsql {

// Owning pointer with value semantics, used to break recursion in the tree.
template <typename T>
class Box {
 public:
  Box() : ptr_(std::make_unique<T>()) {}
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other)
      : ptr_(other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) {
      ptr_ = other.ptr_ ? std::make_unique<T>(*other.ptr_) : nullptr;
    }
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) {
    if (!a.ptr_ || !b.ptr_) return a.ptr_ == b.ptr_;
    return *a.ptr_ == *b.ptr_;
  }

 private:
  std::unique_ptr<T> ptr_;
};

enum class AggregateOp { kNone, kMax, kMin, kCount, kSum, kAvg };
enum class ArithOp { kAdd, kSub, kMul, kDiv };
enum class CompareOp {
  kEq, kNe, kLt, kGt, kLe, kGe, kBetween, kLike, kNotLike, kIn, kNotIn
};
enum class LogicOp { kAnd, kOr };
enum class OrderDirection { kAsc, kDesc };
enum class SetOpKind { kIntersect, kUnion, kExcept };

absl::string_view AggregateName(AggregateOp op);  // "none", "max", ...
absl::string_view ArithName(ArithOp op);          // "+", "-", "*", "/"
absl::string_view CompareName(CompareOp op);      // "=", "not like", ...
absl::string_view LogicName(LogicOp op);          // "and", "or"
absl::string_view SetOpName(SetOpKind kind);      // "intersect", ...

struct SqlQuery;
struct ArithExpr;

// A column reference, optionally wrapped in an aggregate (`max(T1.age)`) and
// carrying an inner DISTINCT (`count(DISTINCT name)`).
struct ColumnRef {
  int column_id = 0;
  AggregateOp aggregate = AggregateOp::kNone;
  bool distinct = false;

  bool operator==(const ColumnRef&) const = default;
};

struct ValueExpr {
  std::variant<ColumnRef, Box<ArithExpr>, Box<SqlQuery>> node;

  static ValueExpr Column(int column_id,
                          AggregateOp aggregate = AggregateOp::kNone,
                          bool distinct = false) {
    return ValueExpr{ColumnRef{column_id, aggregate, distinct}};
  }

  bool is_column() const { return node.index() == 0; }
  bool is_arith() const { return node.index() == 1; }
  bool is_subquery() const { return node.index() == 2; }
  const ColumnRef& column() const { return std::get<0>(node); }
  ColumnRef& column() { return std::get<0>(node); }
  const ArithExpr& arith() const { return *std::get<1>(node); }
  ArithExpr& arith() { return *std::get<1>(node); }
  const SqlQuery& subquery() const { return *std::get<2>(node); }
  SqlQuery& subquery() { return *std::get<2>(node); }

  bool operator==(const ValueExpr&) const = default;
};

struct ArithExpr {
  ArithOp op = ArithOp::kAdd;
  ValueExpr lhs;
  ValueExpr rhs;

  bool operator==(const ArithExpr&) const = default;
};

// A literal kept verbatim; string text excludes the surrounding quotes.
struct Literal {
  enum class Kind { kString, kNumber };
  Kind kind = Kind::kNumber;
  std::string text;

  bool operator==(const Literal&) const = default;
};

using Operand = std::variant<Literal, ValueExpr>;

// `lhs op operand`; BETWEEN carries two operands, every other operator one.
struct Predicate {
  ValueExpr lhs;
  CompareOp op = CompareOp::kEq;
  std::vector<Operand> operands;

  bool operator==(const Predicate&) const = default;
};

struct Condition;

// An AND/OR node with at least two children.
struct Junction {
  LogicOp op = LogicOp::kAnd;
  std::vector<Condition> children;

  bool operator==(const Junction&) const = default;
};

struct Condition {
  std::variant<Predicate, Junction> node;

  bool is_leaf() const { return node.index() == 0; }
  const Predicate& leaf() const { return std::get<0>(node); }
  Predicate& leaf() { return std::get<0>(node); }
  const Junction& junction() const { return std::get<1>(node); }
  Junction& junction() { return std::get<1>(node); }

  bool operator==(const Condition&) const = default;
};

struct SelectItem {
  AggregateOp aggregate = AggregateOp::kNone;
  ValueExpr expr;

  // True for `agg(DISTINCT col)`.
  bool distinct_inner() const {
    return expr.is_column() && expr.column().distinct;
  }
  bool operator==(const SelectItem&) const = default;
};

struct SelectClause {
  bool distinct = false;
  std::vector<SelectItem> items;

  bool operator==(const SelectClause&) const = default;
};

// Table indexes in FROM order (a multiset: self-joins repeat an index) and
// the conjunction of all JOIN ... ON predicates.
struct FromClause {
  std::vector<int> tables;
  std::vector<Predicate> join_conditions;

  bool operator==(const FromClause&) const = default;
};

struct OrderItem {
  ValueExpr expr;
  OrderDirection direction = OrderDirection::kAsc;
  // ASC spelled out in the source text. Not part of the item's identity.
  bool asc_written = false;

  bool operator==(const OrderItem& other) const {
    return expr == other.expr && direction == other.direction;
  }
};

struct SetOperation {
  SetOpKind kind = SetOpKind::kIntersect;
  Box<SqlQuery> right;

  bool operator==(const SetOperation&) const = default;
};

struct SqlQuery {
  // Database the column and table ids are bound to.
  std::string db_id;
  SelectClause select;
  FromClause from;
  std::optional<Condition> where;
  std::vector<int> group_by;
  std::optional<Condition> having;
  std::vector<OrderItem> order_by;
  std::optional<int64_t> limit;
  std::optional<SetOperation> set_op;

  bool operator==(const SqlQuery&) const = default;
};

// Canonical form: AND/OR nodes flattened and their children sorted, FROM
// tables sorted, join conditions oriented (smaller column id left) and
// sorted. Literal text is preserved verbatim. Idempotent.
SqlQuery Normalize(const SqlQuery& query);
Condition NormalizeCondition(const Condition& condition);

// Renders alias-free SQL; every column is written as table.column.
std::string ToText(const SqlQuery& query, const Schema& schema);
std::string ExprToText(const ValueExpr& expr, const Schema& schema);
std::string PredicateToText(const Predicate& predicate, const Schema& schema);
std::string ConditionToText(const Condition& condition, const Schema& schema);
std::string SelectItemToText(const SelectItem& item, const Schema& schema);
std::string OrderItemToText(const OrderItem& item, const Schema& schema);

// Schema-free renderings (columns as #id) used as total-order sort keys and
// as multiset keys by the diff engines.
std::string CanonicalKey(const ValueExpr& expr);
std::string CanonicalKey(const Predicate& predicate);
std::string CanonicalKey(const Condition& condition);
std::string CanonicalKey(const SqlQuery& query);

// Condition leaves in left-to-right order.
std::vector<const Predicate*> ConditionLeaves(const Condition& condition);

enum class UsageClause { kSelect, kWhere, kGroupBy, kHaving, kOrderBy, kJoin };
absl::string_view UsageClauseName(UsageClause clause);

struct ColumnUsage {
  int column_id = 0;
  UsageClause clause = UsageClause::kSelect;
  AggregateOp aggregate = AggregateOp::kNone;
  bool distinct_marked = false;
  std::optional<CompareOp> comparison;
  // Subquery / set-operand nesting depth, 0 at top level.
  int depth = 0;

  auto operator<=>(const ColumnUsage&) const = default;
  bool operator==(const ColumnUsage&) const = default;
};

// One usage per column occurrence, recursing into subqueries and set-operation
// operands. Returned sorted, so equal multisets compare equal.
std::vector<ColumnUsage> CollectColumnUsages(const SqlQuery& query);

// Visits every column reference in an expression (not descending into
// subqueries).
template <typename Fn>
void ForEachColumn(const ValueExpr& expr, Fn&& fn) {
  if (expr.is_column()) {
    fn(expr.column());
  } else if (expr.is_arith()) {
    ForEachColumn(expr.arith().lhs, fn);
    ForEachColumn(expr.arith().rhs, fn);
  }
}

}  // namespace convsql

#endif  // CONVSQL_SQL_AST_H_
