#include "korbit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace korbit {

Partition normalized(Partition p) {
  std::sort(p.begin(), p.end(), std::greater<int>());
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (!p.empty() && p.back() < 0) throw std::invalid_argument("negative partition part");
  return p;
}

int partition_sum(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  t.resize(p[0]);
  for (int j = 0; j < p[0]; ++j) {
    t[j] = static_cast<int>(std::count_if(p.begin(), p.end(), [j](int x) { return x > j; }));
  }
  return t;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool dominates(const Partition& b, const Partition& a) {
  int sa = 0, sb = 0;
  std::size_t k = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < k; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return sa == sb;
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

Int standard_tableau_count(const Partition& p) {
  if (p.empty()) return 1;
  Partition t = transpose(p);
  Int hooks = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      hooks *= (p[i] - j) + (t[j] - static_cast<int>(i)) - 1;
    }
  }
  return factorial(partition_sum(p)) / hooks;
}

std::string partition_to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

}  // namespace korbit
