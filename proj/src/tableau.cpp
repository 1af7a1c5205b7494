#include "korbit/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace korbit {

void SignedTableau::normalize() {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });
}

Partition SignedTableau::underlying() const {
  Partition p;
  for (const auto& [len, sign] : rows) p.push_back(len);
  return normalized(p);
}

std::pair<int, int> SignedTableau::signature() const {
  int plus = 0, minus = 0;
  for (const auto& [len, sign] : rows) {
    int lead = (len + 1) / 2;
    int trail = len / 2;
    if (sign >= 0) {
      plus += lead;
      minus += trail;
    } else {
      plus += trail;
      minus += lead;
    }
  }
  return {plus, minus};
}

bool SignedTableau::is_unsigned() const {
  for (const auto& [len, sign] : rows) {
    if (sign != 0) return false;
  }
  return true;
}

int SignedTableau::rank(int m, int sign) const {
  int total = 0;
  for (const auto& [len, lead] : rows) {
    int count = len - m;  // boxes with at least m successors
    if (count <= 0) continue;
    if (sign == 0 || lead == 0) {
      total += count;
      continue;
    }
    // Positions 1..count carry signs lead, -lead, ...
    if (lead == sign) {
      total += (count + 1) / 2;
    } else {
      total += count / 2;
    }
  }
  return total;
}

std::string SignedTableau::to_string() const {
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < rows.size()) {
    std::size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    if (!first) os << ' ';
    first = false;
    os << rows[i].first << '^' << (j - i);
    if (rows[i].second > 0) os << '+';
    if (rows[i].second < 0) os << '-';
    i = j;
  }
  if (rows.empty()) os << "0";
  return os.str();
}

SignedTableau SignedTableau::parse(const std::string& text) {
  SignedTableau t;
  if (text == "0") return t;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    auto caret = tok.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("tableau token needs '^'");
    int len = std::stoi(tok.substr(0, caret));
    std::string rest = tok.substr(caret + 1);
    int sign = 0;
    if (!rest.empty() && (rest.back() == '+' || rest.back() == '-')) {
      sign = rest.back() == '+' ? 1 : -1;
      rest.pop_back();
    }
    int mult = std::stoi(rest);
    if (len <= 0 || mult <= 0) throw std::invalid_argument("bad tableau token");
    for (int k = 0; k < mult; ++k) t.rows.emplace_back(len, sign);
  }
  t.normalize();
  return t;
}

namespace {

std::map<std::pair<int, int>, int> row_multiplicities(const SignedTableau& t) {
  std::map<std::pair<int, int>, int> m;
  for (const auto& r : t.rows) ++m[r];
  return m;
}

}  // namespace

bool tableau_valid(const SymmetricPair& pair, const SignedTableau& t) {
  SignedTableau n = t;
  n.normalize();
  if (n.rows != t.rows) return false;
  int size = 0;
  for (const auto& [len, sign] : t.rows) {
    size += len;
    if (pair.kind == PairKind::ComplexGL ? sign != 0 : sign == 0) return false;
  }
  if (size != pair.defining_dim()) return false;
  if (pair.kind == PairKind::ComplexGL) return true;

  auto [plus, minus] = t.signature();
  auto mult = row_multiplicities(t);
  auto count = [&](int len, int sign) {
    auto it = mult.find({len, sign});
    return it == mult.end() ? 0 : it->second;
  };
  switch (pair.kind) {
    case PairKind::Upq:
      return plus == pair.p && minus == pair.q;
    case PairKind::SpR: {
      if (plus != pair.p || minus != pair.p) return false;
      for (const auto& [row, m] : mult) {
        if (row.first % 2 == 1 && count(row.first, 1) != count(row.first, -1)) return false;
      }
      return true;
    }
    case PairKind::SpPQ: {
      if (plus != 2 * pair.p || minus != 2 * pair.q) return false;
      for (const auto& [row, m] : mult) {
        if (row.first % 2 == 0 && count(row.first, 1) != count(row.first, -1)) return false;
        if (row.first % 2 == 1 && m % 2 != 0) return false;
      }
      return true;
    }
    default: return false;
  }
}

std::vector<SignedTableau> all_tableaux(const SymmetricPair& pair) {
  std::vector<SignedTableau> out;
  int n = pair.defining_dim();
  for (const auto& shape : partitions_of(n)) {
    // Group lengths and choose the number of leading-plus rows per length.
    std::vector<std::pair<int, int>> groups;  // (length, multiplicity)
    for (int len : shape) {
      if (!groups.empty() && groups.back().first == len) {
        ++groups.back().second;
      } else {
        groups.emplace_back(len, 1);
      }
    }
    std::function<void(std::size_t, SignedTableau&)> rec = [&](std::size_t g, SignedTableau& t) {
      if (g == groups.size()) {
        SignedTableau cand = t;
        cand.normalize();
        if (tableau_valid(pair, cand)) out.push_back(cand);
        return;
      }
      auto [len, m] = groups[g];
      if (pair.kind == PairKind::ComplexGL) {
        for (int k = 0; k < m; ++k) t.rows.emplace_back(len, 0);
        rec(g + 1, t);
        for (int k = 0; k < m; ++k) t.rows.pop_back();
        return;
      }
      for (int plus = 0; plus <= m; ++plus) {
        for (int k = 0; k < plus; ++k) t.rows.emplace_back(len, 1);
        for (int k = plus; k < m; ++k) t.rows.emplace_back(len, -1);
        rec(g + 1, t);
        for (int k = 0; k < m; ++k) t.rows.pop_back();
      }
    };
    SignedTableau t;
    rec(0, t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SignedTableau zero_tableau(const SymmetricPair& pair) {
  SignedTableau t;
  switch (pair.kind) {
    case PairKind::ComplexGL:
      for (int i = 0; i < pair.p; ++i) t.rows.emplace_back(1, 0);
      break;
    case PairKind::Upq:
      for (int i = 0; i < pair.p; ++i) t.rows.emplace_back(1, 1);
      for (int i = 0; i < pair.q; ++i) t.rows.emplace_back(1, -1);
      break;
    case PairKind::SpR:
      for (int i = 0; i < pair.p; ++i) t.rows.emplace_back(1, 1);
      for (int i = 0; i < pair.p; ++i) t.rows.emplace_back(1, -1);
      break;
    case PairKind::SpPQ:
      for (int i = 0; i < 2 * pair.p; ++i) t.rows.emplace_back(1, 1);
      for (int i = 0; i < 2 * pair.q; ++i) t.rows.emplace_back(1, -1);
      break;
  }
  t.normalize();
  return t;
}

bool tableau_closure_leq(const SymmetricPair& pair, const SignedTableau& a,
                         const SignedTableau& b) {
  if (!tableau_valid(pair, a) || !tableau_valid(pair, b)) {
    throw std::invalid_argument("tableau not valid for pair");
  }
  int maxlen = 0;
  for (const auto& [len, sign] : a.rows) maxlen = std::max(maxlen, len);
  for (const auto& [len, sign] : b.rows) maxlen = std::max(maxlen, len);
  for (int m = 1; m <= maxlen; ++m) {
    if (pair.kind == PairKind::ComplexGL) {
      if (a.rank(m, 0) > b.rank(m, 0)) return false;
    } else {
      if (a.rank(m, 1) > b.rank(m, 1)) return false;
      if (a.rank(m, -1) > b.rank(m, -1)) return false;
    }
  }
  return true;
}

}  // namespace korbit
