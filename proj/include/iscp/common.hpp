#ifndef ISCP_COMMON_HPP
#define ISCP_COMMON_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace iscp {

// Malformed input: indices out of range, dimension mismatches, unparseable data.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was called outside its stated precondition.
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction data violates the axioms of the requested structure.
struct axiom_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagree.
struct internal_check_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A size cap or iteration cap was exceeded.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Gram matrix has eigenvalues in the ambiguous zone between zero and safe.
struct conditioning_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Subset of {0,..,n-1} as a packed bit vector.  Used for open sets,
/// ideals (block subsets), and arrow sets alike.
class SubSet {
 public:
  SubSet() : n_(0) {}
  explicit SubSet(int n) : n_(n), w_((n + 63) / 64, 0) {}
  static SubSet full(int n) {
    SubSet s(n);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }
  static SubSet of(int n, const std::vector<int>& elems) {
    SubSet s(n);
    for (int e : elems) {
      if (e < 0 || e >= n) throw structural_error("SubSet element out of range");
      s.set(e);
    }
    return s;
  }

  int universe() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  SubSet operator&(const SubSet& o) const {
    SubSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  SubSet operator|(const SubSet& o) const {
    SubSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  /// Set difference this \ o.
  SubSet operator-(const SubSet& o) const {
    SubSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }
  SubSet complement() const { return full(n_) - *this; }

  bool operator==(const SubSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const SubSet& o) const { return !(*this == o); }
  bool operator<(const SubSet& o) const { return w_ < o.w_; }
  bool subset_of(const SubSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const SubSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(n_);
    for (auto w : w_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

struct SubSetHash {
  std::size_t operator()(const SubSet& s) const { return s.hash(); }
};

/// One violated axiom with the lexicographically first witness tuple.
struct Violation {
  std::string axiom;
  std::vector<int> witness;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
  void add(const std::string& axiom, std::vector<int> witness) {
    valid = false;
    violations.push_back({axiom, std::move(witness)});
  }
};

}  // namespace iscp

#endif
