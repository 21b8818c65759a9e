#ifndef ISCP_ISG_HPP
#define ISCP_ISG_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iscp/common.hpp"

namespace iscp::isg {

/// Finite inverse semigroup given by its Cayley table and involution.
/// Elements are dense indices 0..size-1; the fixed total order on the
/// semigroup used by normal forms is this index order.
class InverseSemigroup {
 public:
  /// Checks every axiom exhaustively.  Out-of-range table entries are a
  /// structural error (thrown), not an axiom failure.
  static ValidationReport validate(int size, const std::vector<int>& mul,
                                   const std::vector<int>& inv,
                                   std::optional<int> unit, std::optional<int> zero);

  InverseSemigroup(int size, std::vector<int> mul, std::vector<int> inv,
                   std::optional<int> unit, std::optional<int> zero,
                   std::vector<std::string> labels = {});

  int size() const { return n_; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  std::optional<int> unit() const { return unit_; }
  std::optional<int> zero() const { return zero_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& mul_table() const { return mul_; }
  const std::vector<int>& inv_table() const { return inv_; }

  bool is_idempotent(int e) const { return mul(e, e) == e; }
  std::vector<int> idempotents() const;

  /// Natural partial order t <= u.  Computed as t == u t* t and
  /// cross-checked against the existence of an idempotent e with t == u e;
  /// a mismatch between the two characterisations is an internal error.
  bool leq(int t, int u) const;

  /// The meet set { v : v <= t and v <= u }.
  std::vector<int> lower_bounds(int t, int u) const;

  InverseSemigroup adjoin_unit() const;
  InverseSemigroup adjoin_zero() const;

  struct PredicateResult {
    bool value = true;
    // witness pair (e, t) violating the condition, when value is false
    std::optional<std::pair<int, int>> witness;
  };

  /// E*-unitary: a nonzero idempotent below t forces t idempotent.
  /// Requires a zero.  Evaluated twice (idempotency route and order-
  /// condition route); disagreement is an internal error.
  PredicateResult is_e_star_unitary() const;

  /// E-unitary: an idempotent below t forces t idempotent.
  PredicateResult is_e_unitary() const;

  /// The order-condition form of the E*-unitary predicate: e <= 1 and
  /// e <= t and e != 0 imply t <= 1.  Uses leq throughout; adjoins a unit
  /// internally when the semigroup has none.
  PredicateResult order_condition() const;

  /// Sub-semigroup of idempotents as a standalone semilattice, together
  /// with the map from new indices to idempotent indices in this semigroup.
  std::pair<InverseSemigroup, std::vector<int>> idempotent_semilattice() const;

  /// Permutation of 0..size-1 ordering elements by label (ties by index).
  std::vector<int> lex_order() const;
  std::vector<int> index_order() const;

 private:
  int n_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::optional<int> unit_, zero_;
  std::vector<std::string> labels_;
};

/// Injective partial map on {0..n-1}; map[i] = -1 when undefined.
struct PartialBijection {
  int n = 0;
  std::vector<int> map;

  bool defined(int x) const { return map[x] >= 0; }
  PartialBijection inverse() const;
  /// this after other: x -> this(other(x)), with exact domain computation.
  PartialBijection compose(const PartialBijection& other) const;
  bool operator==(const PartialBijection& o) const { return n == o.n && map == o.map; }
  bool operator<(const PartialBijection& o) const { return map < o.map; }
  std::string describe() const;
  static PartialBijection empty_map(int n);
  static PartialBijection identity(int n);
};

struct GeneratedSemigroup {
  InverseSemigroup semigroup;
  std::vector<PartialBijection> elements;  // element index -> concrete map
};

/// Closure of the generators under composition and inversion.  The empty
/// generator set yields the trivial semigroup on the empty map.  Exceeding
/// the cap is a resource error.
GeneratedSemigroup from_partial_bijections(int n, const std::vector<PartialBijection>& generators,
                                           int cap = 10000);

}  // namespace iscp::isg

#endif
