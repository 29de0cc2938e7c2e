#include "latkit/counting.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "latkit/errors.hpp"

namespace latkit {

std::size_t s_count(const Lattice& l, std::size_t d) { return l.down(d).count(); }
std::size_t l_count(const Lattice& l, std::size_t d) { return l.up(d).count(); }
std::size_t f_count(const Lattice& l, std::size_t d) { return s_count(l, d) + l_count(l, d) - 1; }

Bitset comparability_set(const Lattice& l, std::size_t d) { return l.down(d) | l.up(d); }

Sums sums(const Lattice& l) {
  Sums s{0, 0};
  for (std::size_t d = 0; d < l.size(); ++d) {
    s.lower += s_count(l, d);
    s.upper += l_count(l, d);
  }
  return s;
}

std::uint64_t comparable_pair_count(const Lattice& l) {
  std::uint64_t c = 0;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(a, b)) ++c;
  return c;
}

std::uint64_t noncomparable_pairs_brute(const Lattice& l) {
  std::uint64_t c = 0;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b)
      if (!l.leq(a, b) && !l.leq(b, a)) ++c;
  return c;
}

std::uint64_t noncomparable_pairs_formula(const Lattice& l) {
  const std::uint64_t n = l.size();
  std::uint64_t f_sum = 0;
  for (std::size_t d = 0; d < l.size(); ++d) f_sum += comparability_set(l, d).count();
  const std::uint64_t num = n * n - f_sum;
  if (num % 2 != 0)
    throw ParityError("|L|^2 - sum f = " + std::to_string(num) + " is odd");
  return num / 2;
}

RankVectors ranks(const Lattice& l, const BirkhoffForm& bf) {
  RankVectors r;
  r.rank.resize(l.size());
  r.corank.resize(l.size());
  for (std::size_t d = 0; d < l.size(); ++d)
    r.rank[d] = static_cast<std::size_t>(std::popcount(bf.ideal_of[d]));
  const std::size_t top_rank = r.rank[l.top()];
  for (std::size_t d = 0; d < l.size(); ++d) r.corank[d] = top_rank - r.rank[d];
  return r;
}

RankVectors ranks(const Lattice& l) {
  require_distributive(l);
  return ranks(l, birkhoff(l));
}

std::size_t rank(const Lattice& l, std::size_t d) { return ranks(l).rank.at(d); }
std::size_t corank(const Lattice& l, std::size_t d) { return ranks(l).corank.at(d); }

std::vector<std::size_t> heights(const Lattice& l) {
  // Process elements by increasing down-set size, which is a linear extension.
  std::vector<std::size_t> order(l.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = l.down(a).count(), cb = l.down(b).count();
    return ca != cb ? ca < cb : a < b;
  });
  std::vector<std::size_t> h(l.size(), 0);
  for (auto v : order)
    for (auto u : l.lower_covers(v)) h[v] = std::max(h[v], h[u] + 1);
  return h;
}

CountProfile count_profile(const Lattice& l) {
  CountProfile p;
  const std::size_t n = l.size();
  p.s.resize(n);
  p.l.resize(n);
  p.f.resize(n);
  for (std::size_t d = 0; d < n; ++d) {
    p.s[d] = s_count(l, d);
    p.l[d] = l_count(l, d);
    p.f[d] = f_count(l, d);
    p.lower_sum += p.s[d];
    p.upper_sum += p.l[d];
  }
  if (is_distributive(l)) {
    auto r = ranks(l, birkhoff(l));
    p.rank = std::move(r.rank);
    p.corank = std::move(r.corank);
  }
  p.n_formula = noncomparable_pairs_formula(l);
  p.n_brute = noncomparable_pairs_brute(l);
  return p;
}

std::string format_profile(const CountProfile& p) {
  std::ostringstream os;
  for (std::size_t d = 0; d < p.s.size(); ++d) {
    os << 'e' << d << " s=" << p.s[d] << " l=" << p.l[d] << " f=" << p.f[d] << " rank=";
    if (p.rank.empty())
      os << "n/a";
    else
      os << p.rank[d];
    os << '\n';
  }
  os << "S=" << p.lower_sum << " L=" << p.upper_sum << " n=" << p.n_formula << '\n';
  return os.str();
}

}  // namespace latkit
