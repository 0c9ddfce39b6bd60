#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "govlab/natural.hpp"

namespace govlab {

/// A qZ+1 rule. Only q = 3 and q = 5 are supported.
class Rule {
 public:
  /// Throws DomainError for any other multiplier.
  static Rule from_multiplier(std::uint64_t q);
  static Rule three() { return from_multiplier(3); }
  static Rule five() { return from_multiplier(5); }

  std::uint64_t multiplier() const { return q_; }
  const std::set<std::size_t>& trivial_indices() const { return trivial_indices_; }
  std::size_t max_trivial_index() const { return *trivial_indices_.rbegin(); }
  const std::vector<Natural>& trivial_cycle() const { return trivial_cycle_; }
  bool in_trivial_cycle(const Natural& x) const;
  bool in_trivial_cycle(unsigned __int128 x) const;
  /// Governor-index drop per odd-to-odd step above the trivial range: v2(q - 1).
  std::size_t descent_delta() const { return descent_delta_; }
  /// Even steps following each odd step above the trivial range.
  std::size_t descent_even_steps() const { return descent_delta_; }
  std::string id() const { return std::to_string(q_) + "Z+1"; }

  friend bool operator==(const Rule& a, const Rule& b) { return a.q_ == b.q_; }

 private:
  Rule() = default;
  std::uint64_t q_ = 0;
  std::set<std::size_t> trivial_indices_;
  std::vector<Natural> trivial_cycle_;
  std::uint64_t trivial_mask_ = 0;  // bit v set iff v is a trivial-cycle member
  std::size_t descent_delta_ = 0;
};

}  // namespace govlab
