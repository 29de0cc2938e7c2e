#include "latkit/generators.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>

#include "latkit/errors.hpp"
#include "latkit/random.hpp"

namespace latkit {

namespace {

void check_points(std::size_t n) {
  if (n > kMaxPoints)
    throw CapError("poset has " + std::to_string(n) + " points; limit is " +
                   std::to_string(kMaxPoints));
}

}  // namespace

Poset chain(std::size_t n) {
  check_points(n);
  std::vector<Edge> covers;
  for (std::size_t i = 1; i < n; ++i) covers.push_back({i - 1, i});
  return poset_from_covers(n, covers);
}

Poset antichain(std::size_t n) {
  check_points(n);
  return poset_from_covers(n, {});
}

Poset boolean(std::size_t k) { return antichain(k); }

Poset grid(std::size_t a, std::size_t b) {
  check_points(a * b);
  std::vector<Edge> covers;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      const std::size_t v = i * b + j;
      if (i + 1 < a) covers.push_back({v, v + b});
      if (j + 1 < b) covers.push_back({v, v + 1});
    }
  return poset_from_covers(a * b, covers);
}

Poset random_poset(std::size_t n, double p, std::uint64_t seed) {
  check_points(n);
  Xorshift64Star rng(seed);
  std::vector<PointMask> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.next_double() < p) below[j] |= point_bit(i);
  return poset_from_relation(n, below);
}

void for_each_poset(std::size_t n, const std::function<void(const Poset&)>& visit) {
  if (n > kMaxEnumeratePoints)
    throw CapError("exhaustive enumeration supports at most " +
                   std::to_string(kMaxEnumeratePoints) + " points, got " + std::to_string(n));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  // Each unordered pair is unrelated, i<j, or j<i: walk all 3^pairs states
  // and keep the ones already transitively closed.
  std::vector<int> state(pairs.size(), 0);
  std::vector<PointMask> below(n);
  while (true) {
    for (std::size_t j = 0; j < n; ++j) below[j] = point_bit(j);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      if (state[k] == 1) below[j] |= point_bit(i);
      if (state[k] == 2) below[i] |= point_bit(j);
    }
    bool closed = true;
    for (std::size_t j = 0; j < n && closed; ++j)
      for (PointMask m = below[j]; m; m &= m - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(m));
        if (below[i] & ~below[j]) {
          closed = false;
          break;
        }
      }
    if (closed) visit(poset_from_relation(n, below));

    std::size_t k = 0;
    while (k < state.size() && state[k] == 2) state[k++] = 0;
    if (k == state.size()) break;
    ++state[k];
  }
}

std::vector<Poset> enumerate_posets(std::size_t n) {
  std::vector<Poset> out;
  for_each_poset(n, [&](const Poset& p) { out.push_back(p); });
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t column) {
  T value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end)
    throw ParseError(1, column, "invalid number '" + std::string(field) + "'");
  return value;
}

double parse_probability(std::string_view field, std::size_t column) {
  // from_chars for double is missing from older libstdc++.
  std::istringstream in{std::string(field)};
  double p = 0;
  in >> p;
  if (field.empty() || !in || !in.eof() || !(p >= 0.0 && p <= 1.0))
    throw ParseError(1, column, "probability must be in [0,1], got '" + std::string(field) + "'");
  return p;
}

}  // namespace

GenSpec parse_gen_spec(std::string_view text) {
  const auto fields = split(text, ':');
  std::vector<std::size_t> columns;
  std::size_t col = 1;
  for (const auto& f : fields) {
    columns.push_back(col);
    col += f.size() + 1;
  }
  GenSpec spec;
  const auto& kind = fields[0];
  auto expect = [&](std::size_t count) {
    if (fields.size() != count + 1)
      throw ParseError(1, 1,
                       "'" + std::string(kind) + "' takes " + std::to_string(count) + " parameter(s)");
  };
  auto size_at = [&](std::size_t k) { return parse_number<std::size_t>(fields[k], columns[k]); };
  if (kind == "chain" || kind == "antichain" || kind == "boolean" || kind == "enumerate") {
    expect(1);
    spec.kind = kind == "chain"       ? GenSpec::Kind::chain
                : kind == "antichain" ? GenSpec::Kind::antichain
                : kind == "boolean"   ? GenSpec::Kind::boolean
                                      : GenSpec::Kind::enumerate;
    spec.sizes = {size_at(1)};
  } else if (kind == "grid") {
    expect(2);
    spec.kind = GenSpec::Kind::grid;
    spec.sizes = {size_at(1), size_at(2)};
  } else if (kind == "random") {
    expect(3);
    spec.kind = GenSpec::Kind::random;
    spec.sizes = {size_at(1)};
    spec.p = parse_probability(fields[2], columns[2]);
    spec.seed = parse_number<std::uint64_t>(fields[3], columns[3]);
  } else {
    throw ParseError(1, 1, "unknown generator '" + std::string(kind) + "'");
  }
  return spec;
}

std::string to_string(const GenSpec& spec) {
  std::ostringstream os;
  switch (spec.kind) {
    case GenSpec::Kind::chain: os << "chain:" << spec.sizes[0]; break;
    case GenSpec::Kind::antichain: os << "antichain:" << spec.sizes[0]; break;
    case GenSpec::Kind::boolean: os << "boolean:" << spec.sizes[0]; break;
    case GenSpec::Kind::enumerate: os << "enumerate:" << spec.sizes[0]; break;
    case GenSpec::Kind::grid: os << "grid:" << spec.sizes[0] << ':' << spec.sizes[1]; break;
    case GenSpec::Kind::random:
      os << "random:" << spec.sizes[0] << ':' << spec.p << ':' << spec.seed;
      break;
  }
  return os.str();
}

std::vector<Poset> generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenSpec::Kind::chain: return {chain(spec.sizes[0])};
    case GenSpec::Kind::antichain: return {antichain(spec.sizes[0])};
    case GenSpec::Kind::boolean: return {boolean(spec.sizes[0])};
    case GenSpec::Kind::grid: return {grid(spec.sizes[0], spec.sizes[1])};
    case GenSpec::Kind::random: return {random_poset(spec.sizes[0], spec.p, spec.seed)};
    case GenSpec::Kind::enumerate: return enumerate_posets(spec.sizes[0]);
  }
  return {};
}

}  // namespace latkit
