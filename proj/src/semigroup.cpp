#include "conc2/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace conc2 {

namespace {

void check_gap_sequence(const std::vector<int>& gaps) {
  int prev = 0;
  for (int g : gaps) {
    if (g <= prev) {
      throw SemigroupError("gap sequence must be strictly increasing and positive");
    }
    prev = g;
  }
}

}  // namespace

void NumericalSemigroup::finalize() {
  const int f = frobenius_;
  member_.assign(static_cast<std::size_t>(f) + 2, true);
  member_[0] = true;
  for (int g : gaps_) member_[static_cast<std::size_t>(g)] = false;

  // closure: members a, b with a+b <= F must sum to a member
  for (int a = 1; a <= f; ++a) {
    if (!member_[a]) continue;
    for (int b = a; a + b <= f; ++b) {
      if (member_[b] && !member_[a + b]) {
        throw SemigroupError("complement of gap set is not additively closed (" +
                             std::to_string(a) + "+" + std::to_string(b) +
                             " is a gap)");
      }
    }
  }

  multiplicity_ = 1;
  while (multiplicity_ <= f && !member_[multiplicity_]) ++multiplicity_;

  // concentration: largest jump between consecutive members below F, plus
  // the jump from the last such member to F+1; everything past F steps by 1
  concentration_ = 1;
  int prev = -1;
  for (int s = 1; s < f; ++s) {
    if (!member_[s]) continue;
    if (prev > 0) concentration_ = std::max(concentration_, s - prev);
    prev = s;
  }
  if (prev > 0) concentration_ = std::max(concentration_, f + 1 - prev);

  // minimal generators live in [m, F+m]: a member is minimal iff it is not
  // a sum of two positive members
  msg_.clear();
  if (gaps_.empty()) {
    msg_.push_back(1);
    return;
  }
  const int hi = f + multiplicity_;
  for (int s = multiplicity_; s <= hi; ++s) {
    if (!contains(s)) continue;
    bool minimal = true;
    for (int a = multiplicity_; a <= s - multiplicity_; ++a) {
      if (contains(a) && contains(s - a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) msg_.push_back(s);
  }
}

NumericalSemigroup NumericalSemigroup::natural() {
  NumericalSemigroup s;
  s.frobenius_ = -1;
  s.finalize();
  return s;
}

NumericalSemigroup NumericalSemigroup::ordinary(int m) {
  if (m < 1) throw SemigroupError("multiplicity must be >= 1");
  std::vector<int> gaps(static_cast<std::size_t>(m - 1));
  std::iota(gaps.begin(), gaps.end(), 1);
  return from_gaps(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<int> gaps) {
  check_gap_sequence(gaps);
  NumericalSemigroup s;
  s.frobenius_ = gaps.empty() ? -1 : gaps.back();
  s.gaps_ = std::move(gaps);
  s.finalize();
  return s;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<int> gens) {
  if (gens.empty()) throw EmptyInputError();
  for (int g : gens) {
    if (g < 1) throw SemigroupError("generators must be positive");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  long long d = 0;
  for (int g : gens) d = std::gcd(d, static_cast<long long>(g));
  if (d != 1) throw GcdNotOneError(d);

  const int m = gens.front();
  int bound = std::max(64, 2 * gens.back());
  for (;;) {
    std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
    reach[0] = 1;
    for (int i = 1; i <= bound; ++i) {
      for (int g : gens) {
        if (i >= g && reach[i - g]) {
          reach[i] = 1;
          break;
        }
      }
    }
    // a run of m consecutive members at s..s+m-1 makes everything >= s a member
    int run = 0;
    int start = -1;
    for (int i = 1; i <= bound; ++i) {
      run = reach[i] ? run + 1 : 0;
      if (run == m) {
        start = i - m + 1;
        break;
      }
    }
    if (start < 0) {
      bound *= 2;
      continue;
    }
    std::vector<int> gaps;
    for (int i = 1; i < start; ++i) {
      if (!reach[i]) gaps.push_back(i);
    }
    return from_gaps(std::move(gaps));
  }
}

NumericalSemigroup NumericalSemigroup::elementary_with_upper_set(
    int m, const std::vector<int>& upper) {
  if (m < 2) throw SemigroupError("multiplicity must be >= 2");
  std::vector<bool> in_upper(static_cast<std::size_t>(2 * m), false);
  for (int a : upper) {
    if (a < m + 1 || a > 2 * m - 1) {
      throw ElementOutOfRangeError("element " + std::to_string(a) +
                                   " outside [" + std::to_string(m + 1) + ", " +
                                   std::to_string(2 * m - 1) + "]");
    }
    in_upper[static_cast<std::size_t>(a)] = true;
  }
  std::vector<int> gaps;
  for (int i = 1; i < m; ++i) gaps.push_back(i);
  for (int i = m + 1; i <= 2 * m - 1; ++i) {
    if (!in_upper[static_cast<std::size_t>(i)]) gaps.push_back(i);
  }
  return from_gaps(std::move(gaps));
}

int NumericalSemigroup::next_element(long long s) const {
  long long x = std::max(s + 1, 0LL);
  while (!contains(x)) ++x;
  return static_cast<int>(x);
}

bool NumericalSemigroup::is_concentration_two() const {
  if (is_half_line()) return false;
  for (int x : msg_) {
    if (!contains(x + 1) && !contains(x + 2)) return false;
  }
  return true;
}

NumericalSemigroup NumericalSemigroup::remove_element(int x) const {
  if (!std::binary_search(msg_.begin(), msg_.end(), x)) {
    throw NotMinimalGeneratorError(x);
  }
  std::vector<int> gaps = gaps_;
  gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), x), x);
  return from_gaps(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::add_frobenius() const {
  if (gaps_.empty()) throw NoFrobeniusError();
  std::vector<int> gaps(gaps_.begin(), gaps_.end() - 1);
  return from_gaps(std::move(gaps));
}

NumericalSemigroup NumericalSemigroup::add_element(int x) const {
  auto it = std::find(gaps_.begin(), gaps_.end(), x);
  if (it == gaps_.end()) {
    throw SemigroupError(std::to_string(x) + " is not a gap");
  }
  std::vector<int> gaps = gaps_;
  gaps.erase(gaps.begin() + (it - gaps_.begin()));
  return from_gaps(std::move(gaps));
}

std::vector<int> NumericalSemigroup::elements_up_to(int bound) const {
  std::vector<int> out;
  for (int x = 0; x <= bound; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::string NumericalSemigroup::label() const {
  std::ostringstream os;
  os << "⟨";
  for (std::size_t i = 0; i < msg_.size(); ++i) {
    if (i) os << ",";
    os << msg_[i];
  }
  os << "⟩";
  return os.str();
}

}  // namespace conc2
