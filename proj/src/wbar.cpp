#include <algorithm>
#include <functional>

#include "grassgb/detail/term_set.hpp"
#include "grassgb/grassmann.hpp"

namespace grassgb {

namespace {

constexpr unsigned kMaxWbarClasses = 8;
constexpr unsigned kMaxWbarDegree = 512;

void check_wbar_args(unsigned r, unsigned k) {
  if (k < 1 || k > kMaxWbarClasses) throw UsageError("wbar supports 1 <= k <= 8");
  if (r > kMaxWbarDegree) throw UsageError("wbar supports degrees up to 512");
}

using Exponents = std::vector<Exponent>;

}  // namespace

std::string to_string(const WPolynomial& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const Exponents& term : p.terms) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'w' + std::to_string(i + 1);
      if (term[i] != 1) mono += '^' + std::to_string(term[i]);
    }
    out += mono.empty() ? "1" : mono;
  }
  return out;
}

WPolynomial wbar(unsigned r, unsigned k) {
  check_wbar_args(r, k);
  WPolynomial out{k, {}};
  Exponents a(k, 0);
  // Choose a_k, a_{k-1}, ..., a_2; a_1 takes the remaining degree. A partial
  // choice with overlapping bits already makes the multinomial even.
  std::function<void(unsigned, unsigned, std::uint64_t)> choose =
      [&](unsigned index, unsigned remaining, std::uint64_t used_bits) {
        if (index == 1) {
          if ((remaining & used_bits) != 0) return;
          a[0] = remaining;
          const std::vector<std::uint64_t> parts(a.begin(), a.end());
          if (multinomial_mod2(parts) == 1) out.terms.push_back(a);
          return;
        }
        for (unsigned value = 0; value * index <= remaining; ++value) {
          if ((value & used_bits) != 0) continue;
          a[index - 1] = value;
          choose(index - 1, remaining - value * index, used_bits | value);
        }
        a[index - 1] = 0;
      };
  choose(k, r, 0);
  std::sort(out.terms.begin(), out.terms.end(), std::greater<>{});
  return out;
}

WPolynomial wbar_recurrence(unsigned r, unsigned k) {
  check_wbar_args(r, k);
  std::vector<std::vector<Exponents>> series;
  series.push_back({Exponents(k, 0)});
  for (unsigned m = 1; m <= r; ++m) {
    std::vector<Exponents> next;
    for (unsigned i = 1; i <= std::min(m, k); ++i) {
      for (Exponents term : series[m - i]) {
        ++term[i - 1];
        next.push_back(std::move(term));
      }
    }
    detail::collapse_parity(next);
    series.push_back(std::move(next));
  }
  return {k, std::move(series[r])};
}

}  // namespace grassgb
