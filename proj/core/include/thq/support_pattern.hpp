#pragma once

#include <compare>
#include <string>
#include <vector>

namespace thq {

// Which of the two coordinates over index i is nonzero.
enum class CoordState : unsigned char { None = 0, ZOnly = 1, WOnly = 2, Both = 3 };

// Zero/nonzero shape of a point (z, w) in C^n x C^n.
struct SupportPattern {
  std::vector<CoordState> state;

  static SupportPattern none(int n) { return {std::vector<CoordState>(n, CoordState::None)}; }
  static SupportPattern all_z(int n) { return {std::vector<CoordState>(n, CoordState::ZOnly)}; }
  static SupportPattern all_w(int n) { return {std::vector<CoordState>(n, CoordState::WOnly)}; }

  int size() const { return static_cast<int>(state.size()); }
  bool z_active(int i) const {
    return state[i] == CoordState::ZOnly || state[i] == CoordState::Both;
  }
  bool w_active(int i) const {
    return state[i] == CoordState::WOnly || state[i] == CoordState::Both;
  }
  bool active(int i) const { return state[i] != CoordState::None; }

  std::vector<int> support() const;       // indices with any activity
  std::vector<int> both_indices() const;  // indices where both coordinates live
  int support_size() const { return static_cast<int>(support().size()); }
  bool empty() const { return support_size() == 0; }

  // componentwise activity order: p <= q when q is active wherever p is,
  // in the same coordinates
  bool subset_of(const SupportPattern& q) const;

  auto operator<=>(const SupportPattern&) const = default;

  std::string to_string() const;  // one letter per index: . z w b

  // all 4^n patterns in lexicographic order; n must stay small
  static std::vector<SupportPattern> enumerate_all(int n);
};

}  // namespace thq
