#include "sqtaut/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "sqtaut/errors.hpp"

namespace sqtaut {

namespace {

// Akiyama-Tanigawa: row m starts at 1/(m+1); each pass a[j] = (j+1)(a[j] - a[j+1]).
// Leaves B_m (with B_1 = +1/2) in a[0] after processing row m.
std::vector<Rational> compute_table(int upto) {
  std::vector<Rational> out(static_cast<std::size_t>(upto) + 1);
  std::vector<Rational> a(static_cast<std::size_t>(upto) + 1);
  for (int m = 0; m <= upto; ++m) {
    a[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      auto uj = static_cast<std::size_t>(j);
      a[uj - 1] = Rational(j) * (a[uj - 1] - a[uj]);
    }
    out[static_cast<std::size_t>(m)] = a[0];
  }
  return out;
}

std::mutex table_mutex;
std::vector<Rational> table;

}  // namespace

Rational bernoulli(int n) {
  if (n < 2 || n % 2 != 0)
    throw InputError("bernoulli: index must be even and >= 2, got " + std::to_string(n));
  std::lock_guard lock(table_mutex);
  if (table.size() <= static_cast<std::size_t>(n)) table = compute_table(std::max(n, 2 * static_cast<int>(table.size())));
  return table[static_cast<std::size_t>(n)];
}

}  // namespace sqtaut
