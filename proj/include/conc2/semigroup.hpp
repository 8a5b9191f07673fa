// Exact representation of a numerical semigroup together with the
// invariants used by the enumeration engine: gap set, Frobenius number,
// multiplicity, genus, minimal generating set, concentration, n(S).
//
// Values are immutable after construction and cheap to copy; every
// operation is a pure function.

#ifndef CONC2_SEMIGROUP_HPP_
#define CONC2_SEMIGROUP_HPP_

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace conc2 {

struct SemigroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInputError : SemigroupError {
  EmptyInputError() : SemigroupError("generator list is empty") {}
};

struct GcdNotOneError : SemigroupError {
  explicit GcdNotOneError(long long d)
      : SemigroupError("gcd of generators is " + std::to_string(d) +
                       ", must be 1") {}
};

struct NotMinimalGeneratorError : SemigroupError {
  explicit NotMinimalGeneratorError(int x)
      : SemigroupError(std::to_string(x) + " is not a minimal generator") {}
};

struct NoFrobeniusError : SemigroupError {
  NoFrobeniusError() : SemigroupError("the full monoid has no Frobenius number") {}
};

struct ElementOutOfRangeError : SemigroupError {
  using SemigroupError::SemigroupError;
};

class NumericalSemigroup {
 public:
  // The full monoid of nonnegative integers (no gaps).
  static NumericalSemigroup natural();

  // The half-line {0, m, m+1, ...}.
  static NumericalSemigroup ordinary(int m);

  // Submonoid generated by gens; requires gcd(gens) = 1.
  static NumericalSemigroup from_generators(std::vector<int> gens);

  // Construct from a strictly increasing gap set; the complement must be
  // additively closed (checked).
  static NumericalSemigroup from_gaps(std::vector<int> gaps);

  // {0, m} ∪ upper ∪ {2m, ->} with upper ⊆ [m+1, 2m-1].  Every elementary
  // semigroup of multiplicity m has this shape.
  static NumericalSemigroup elementary_with_upper_set(int m,
                                                      const std::vector<int>& upper);

  bool contains(long long x) const {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return member_[static_cast<std::size_t>(x)];
  }

  // Least member strictly greater than s.
  int next_element(long long s) const;

  const std::vector<int>& gaps() const { return gaps_; }
  int frobenius() const { return frobenius_; }
  int multiplicity() const { return multiplicity_; }
  int genus() const { return static_cast<int>(gaps_.size()); }
  const std::vector<int>& minimal_generators() const { return msg_; }
  int embedding_dimension() const { return static_cast<int>(msg_.size()); }
  int concentration() const { return concentration_; }

  // #{s in S | s < F(S)}.
  int n_count() const {
    return gaps_.empty() ? 0 : frobenius_ + 1 - genus();
  }

  // F(S) < m(S), i.e. S is ℕ or some half-line {0, m, ->}.
  bool is_half_line() const { return frobenius_ < multiplicity_; }

  // F(S) < 2 m(S).
  bool is_elementary() const { return frobenius_ < 2 * multiplicity_; }

  // Concentration-2 test through the minimal-generator criterion: S is not
  // a half-line and every minimal generator x has x+1 or x+2 in S.
  // Agrees with concentration() == 2.
  bool is_concentration_two() const;

  // S \ {x}; requires x to be a minimal generator.
  NumericalSemigroup remove_element(int x) const;

  // S ∪ {F(S)}.
  NumericalSemigroup add_frobenius() const;

  // S ∪ {x} for a gap x whose adjunction leaves the set closed (checked).
  NumericalSemigroup add_element(int x) const;

  // All members in [0, bound].
  std::vector<int> elements_up_to(int bound) const;

  // Display form "⟨n1,...,ne⟩" built from the minimal generators.
  std::string label() const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.gaps_ == b.gaps_;
  }

  // Canonical order: lexicographic on gap sequences.
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a,
                                          const NumericalSemigroup& b) {
    return a.gaps_ <=> b.gaps_;
  }

 private:
  NumericalSemigroup() = default;
  void finalize();  // fills member_, multiplicity_, msg_, concentration_

  std::vector<int> gaps_;      // strictly increasing, all >= 1
  std::vector<bool> member_;   // membership over [0, frobenius_ + 1]
  std::vector<int> msg_;       // minimal generating set
  int frobenius_ = -1;
  int multiplicity_ = 1;
  int concentration_ = 1;
};

}  // namespace conc2

#endif  // CONC2_SEMIGROUP_HPP_
