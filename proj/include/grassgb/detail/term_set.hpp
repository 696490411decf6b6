#ifndef GRASSGB_DETAIL_TERM_SET_HPP
#define GRASSGB_DETAIL_TERM_SET_HPP

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

namespace grassgb::detail {

// Symmetric difference of two strictly decreasing term lists.
template <class M>
std::vector<M> xor_merge(std::span<const M> x, std::span<const M> y) {
  std::vector<M> out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    const auto ord = *i <=> *j;
    if (ord > 0) {
      out.push_back(*i++);
    } else if (ord < 0) {
      out.push_back(*j++);
    } else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, x.end());
  out.insert(out.end(), j, y.end());
  return out;
}

// Sorts decreasingly and keeps each monomial that occurs an odd number of times.
template <class M>
void collapse_parity(std::vector<M>& terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>{});
  std::size_t kept = 0;
  for (std::size_t first = 0; first < terms.size();) {
    std::size_t last = first;
    while (last < terms.size() && terms[last] == terms[first]) ++last;
    if ((last - first) % 2 == 1) terms[kept++] = terms[first];
    first = last;
  }
  terms.resize(kept);
}

}  // namespace grassgb::detail

#endif  // GRASSGB_DETAIL_TERM_SET_HPP
