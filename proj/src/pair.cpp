#include "korbit/pair.hpp"

#include <sstream>
#include <stdexcept>

namespace korbit {

std::string SymmetricPair::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case PairKind::ComplexGL: os << "cgl:" << p; break;
    case PairKind::Upq: os << "upq:" << p << ',' << q; break;
    case PairKind::SpR: os << "spr:" << p; break;
    case PairKind::SpPQ: os << "sppq:" << p << ',' << q; break;
  }
  return os.str();
}

SymmetricPair parse_pair(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("pair spec needs ':'");
  std::string name = text.substr(0, colon);
  std::string args = text.substr(colon + 1);
  auto parse_one = [&]() {
    std::size_t pos = 0;
    int v = std::stoi(args, &pos);
    if (pos != args.size() || v <= 0) throw std::invalid_argument("bad pair parameter");
    return v;
  };
  auto parse_two = [&]() {
    auto comma = args.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("pair spec needs two parameters");
    int a = std::stoi(args.substr(0, comma));
    int b = std::stoi(args.substr(comma + 1));
    if (a <= 0 || b <= 0) throw std::invalid_argument("bad pair parameter");
    return std::pair<int, int>{a, b};
  };
  if (name == "cgl") return SymmetricPair::complex_gl(parse_one());
  if (name == "spr") return SymmetricPair::sp_r(parse_one());
  if (name == "upq") {
    auto [a, b] = parse_two();
    return SymmetricPair::upq(a, b);
  }
  if (name == "sppq") {
    auto [a, b] = parse_two();
    return SymmetricPair::sp_pq(a, b);
  }
  throw std::invalid_argument("unknown pair kind: " + name);
}

void validate_parabolic(const SymmetricPair& pair, const ParabolicType& P) {
  for (int i : P.levi) {
    if (i < 1 || i > pair.root_rank()) throw std::invalid_argument("Levi root index out of range");
  }
}

namespace {

// Coordinate block sizes of the Levi: consecutive coordinates are glued by the
// short simple roots present in the Levi.  `coords` is N for GL, n for Sp.
std::vector<int> coordinate_blocks(int coords, const std::set<int>& levi) {
  std::vector<int> blocks;
  int cur = 1;
  for (int i = 1; i < coords; ++i) {
    if (levi.count(i)) {
      ++cur;
    } else {
      blocks.push_back(cur);
      cur = 1;
    }
  }
  blocks.push_back(cur);
  return blocks;
}

}  // namespace

LeviType levi_of(const SymmetricPair& pair, const ParabolicType& P) {
  validate_parabolic(pair, P);
  LeviType out;
  if (pair.ambient() == Ambient::GL) {
    int coords = (pair.kind == PairKind::ComplexGL) ? pair.p : pair.p + pair.q;
    for (int b : coordinate_blocks(coords, P.levi)) out.push_back({false, b});
    return out;
  }
  int n = pair.root_rank();
  auto blocks = coordinate_blocks(n, P.levi);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    bool last = (i + 1 == blocks.size());
    out.push_back({last && P.levi.count(n) > 0, blocks[i]});
  }
  return out;
}

int dim_full_flag(const SymmetricPair& pair) {
  switch (pair.kind) {
    case PairKind::ComplexGL: return pair.p * (pair.p - 1);
    case PairKind::Upq: {
      int n = pair.p + pair.q;
      return n * (n - 1) / 2;
    }
    case PairKind::SpR: return pair.p * pair.p;
    case PairKind::SpPQ: {
      int n = pair.p + pair.q;
      return n * n;
    }
  }
  return 0;
}

namespace {

// dim l for one classical factor, and dim g for the ambient, both complex.
int levi_dim(const SymmetricPair& pair, const ParabolicType& P) {
  int d = 0;
  for (const auto& f : levi_of(pair, P)) {
    d += f.hyperoctahedral ? f.size * (2 * f.size + 1) : f.size * f.size;
  }
  return d;
}

int ambient_dim(const SymmetricPair& pair) {
  switch (pair.ambient()) {
    case Ambient::GL: {
      int n = (pair.kind == PairKind::ComplexGL) ? pair.p : pair.p + pair.q;
      return n * n;
    }
    case Ambient::Sp: {
      int n = pair.root_rank();
      return n * (2 * n + 1);
    }
  }
  return 0;
}

}  // namespace

int dim_g_mod_p(const SymmetricPair& pair, const ParabolicType& P) {
  int one = (ambient_dim(pair) - levi_dim(pair, P)) / 2;
  return (pair.kind == PairKind::ComplexGL) ? 2 * one : one;
}

int dim_partial_flag(const SymmetricPair& pair, const ParabolicType& P) {
  // The flag variety of each factor has dimension equal to the number of
  // roots in the nilradical.
  return dim_g_mod_p(pair, P);
}

}  // namespace korbit
