#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace minorlab {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Node-capped search budget.  Absence claims are made only when a search
// exhausts its space; running out of budget yields an explicit "unknown".
struct SearchBudget {
  std::int64_t node_cap = 20'000'000;

  SearchBudget() = default;
  explicit SearchBudget(std::int64_t cap) : node_cap(cap) {
    if (cap <= 0) throw std::invalid_argument("SearchBudget: cap must be positive");
  }
};

enum class SearchStatus { found, absent, unknown };

template <typename T>
struct SearchOutcome {
  SearchStatus status = SearchStatus::unknown;
  std::optional<T> value;

  static SearchOutcome found_with(T v) { return {SearchStatus::found, std::move(v)}; }
  static SearchOutcome absent() { return {SearchStatus::absent, std::nullopt}; }
  static SearchOutcome unknown() { return {SearchStatus::unknown, std::nullopt}; }

  bool found() const { return status == SearchStatus::found; }
};

namespace detail {

struct BudgetMeter {
  std::int64_t left;
  explicit BudgetMeter(const SearchBudget& b) : left(b.node_cap) {}
  // returns false once the budget is gone
  bool tick() { return --left >= 0; }
  bool exhausted() const { return left < 0; }
};

}  // namespace detail

}  // namespace minorlab
