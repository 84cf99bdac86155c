#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "groversim/amplitude.hpp"
#include "groversim/errors.hpp"

namespace groversim {

/// The search predicate f. Either an explicit marked set (f(r) = 1 iff r is
/// in the set) or an opaque predicate over [0, 2^n).
///
/// eval_count() counts evaluation passes: one per phase inversion over the
/// whole register, which is how the search's cost is measured.
class Oracle {
 public:
  using Predicate = std::function<bool(BasisIndex)>;

  static Oracle from_marked(unsigned n, std::vector<BasisIndex> marked) {
    check_qubit_count(n);
    std::sort(marked.begin(), marked.end());
    marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
    const BasisIndex size = BasisIndex{1} << n;
    for (BasisIndex r : marked) {
      if (r >= size) {
        throw DomainError("marked index " + std::to_string(r) + " out of range for " +
                          std::to_string(n) + " qubits");
      }
    }
    return Oracle(n, std::move(marked), {});
  }

  static Oracle from_predicate(unsigned n, Predicate f) {
    check_qubit_count(n);
    if (!f) throw DomainError("oracle predicate is empty");
    return Oracle(n, std::nullopt, std::move(f));
  }

  unsigned qubits() const noexcept { return qubits_; }
  BasisIndex state_count() const noexcept { return BasisIndex{1} << qubits_; }

  bool is_set_form() const noexcept { return marked_.has_value(); }

  // f(r). Does not touch eval_count.
  bool operator()(BasisIndex r) const {
    if (marked_) return std::binary_search(marked_->begin(), marked_->end(), r);
    return predicate_(r);
  }

  /// Sorted marked indices. For predicate oracles this enumerates the
  /// predicate over every basis state.
  std::vector<BasisIndex> marked() const {
    if (marked_) return *marked_;
    std::vector<BasisIndex> out;
    for (BasisIndex r = 0; r < state_count(); ++r) {
      if (predicate_(r)) out.push_back(r);
    }
    return out;
  }

  // Calls fn(r) for each marked r in increasing order.
  template <class Fn>
  void for_each_marked(Fn&& fn) const {
    if (marked_) {
      for (BasisIndex r : *marked_) fn(r);
      return;
    }
    for (BasisIndex r = 0; r < state_count(); ++r) {
      if (predicate_(r)) fn(r);
    }
  }

  std::uint64_t marked_count() const {
    return marked_ ? marked_->size() : marked().size();
  }

  std::uint64_t eval_count() const noexcept { return evals_; }
  void record_evaluation() noexcept { ++evals_; }
  void reset_eval_count() noexcept { evals_ = 0; }

 private:
  Oracle(unsigned n, std::optional<std::vector<BasisIndex>> marked, Predicate f)
      : qubits_(n), marked_(std::move(marked)), predicate_(std::move(f)) {}

  unsigned qubits_;
  std::optional<std::vector<BasisIndex>> marked_;
  Predicate predicate_;
  std::uint64_t evals_ = 0;
};

}  // namespace groversim
