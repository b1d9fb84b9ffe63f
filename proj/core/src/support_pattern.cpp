#include "thq/support_pattern.hpp"

#include "thq/errors.hpp"

namespace thq {

std::vector<int> SupportPattern::support() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (active(i)) out.push_back(i);
  return out;
}

std::vector<int> SupportPattern::both_indices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (state[i] == CoordState::Both) out.push_back(i);
  return out;
}

bool SupportPattern::subset_of(const SupportPattern& q) const {
  if (size() != q.size()) throw UsageError("pattern length mismatch");
  for (int i = 0; i < size(); ++i) {
    if (z_active(i) && !q.z_active(i)) return false;
    if (w_active(i) && !q.w_active(i)) return false;
  }
  return true;
}

std::string SupportPattern::to_string() const {
  static const char letter[] = {'.', 'z', 'w', 'b'};
  std::string s;
  s.reserve(state.size());
  for (CoordState c : state) s.push_back(letter[static_cast<int>(c)]);
  return s;
}

std::vector<SupportPattern> SupportPattern::enumerate_all(int n) {
  if (n < 0 || n > 12) throw UsageError("pattern sweep limited to n <= 12");
  std::vector<SupportPattern> all;
  all.reserve(static_cast<std::size_t>(1) << (2 * n));
  SupportPattern p = none(n);
  for (;;) {
    all.push_back(p);
    int i = n - 1;
    while (i >= 0 && p.state[i] == CoordState::Both) {
      p.state[i] = CoordState::None;
      --i;
    }
    if (i < 0) break;
    p.state[i] = static_cast<CoordState>(static_cast<int>(p.state[i]) + 1);
  }
  return all;
}

}  // namespace thq
