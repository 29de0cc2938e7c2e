#include "latkit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "latkit/errors.hpp"

namespace latkit {

namespace {

enum class Header { poset, lattice };

struct Parsed {
  Header header;
  std::size_t n = 0;
  std::vector<Edge> covers;
};

// Cursor over one line; columns are 1-based.
class LineScanner {
 public:
  LineScanner(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t next_column() {
    skip_space();
    return column();
  }

  [[noreturn]] void error(const std::string& msg, std::size_t column) const {
    throw ParseError(line_no_, column, msg);
  }

  std::size_t number(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
      const std::size_t digit = static_cast<std::size_t>(line_[pos_] - '0');
      if (value > (std::size_t{1} << 40)) error(std::string(what) + " is too large", start + 1);
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) error(std::string("expected ") + what, start + 1);
    return value;
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && std::isalpha(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    return line_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= line_.size() || line_[pos_] != c)
      error(std::string("expected '") + c + "'", pos_ + 1);
    ++pos_;
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

Parsed parse_text(std::string_view text) {
  Parsed out;
  bool have_header = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineScanner sc(line, line_no);
    if (sc.at_end()) continue;
    if (!have_header) {
      const std::size_t col = sc.column();
      const auto kw = sc.word();
      if (kw == "poset")
        out.header = Header::poset;
      else if (kw == "lattice")
        out.header = Header::lattice;
      else
        sc.error("expected header 'poset <n>' or 'lattice <n>'", col);
      out.n = sc.number("element count");
      if (!sc.at_end()) sc.error("unexpected text after header", sc.column());
      have_header = true;
    } else {
      const std::size_t lo_col = sc.next_column();
      const std::size_t lo = sc.number("element index");
      sc.expect('<');
      const std::size_t hi_col = sc.next_column();
      const std::size_t hi = sc.number("element index");
      if (!sc.at_end()) sc.error("unexpected text after cover", sc.column());
      if (lo >= out.n)
        sc.error("index " + std::to_string(lo) + " out of range [0," + std::to_string(out.n) + ")",
                 lo_col);
      if (hi >= out.n)
        sc.error("index " + std::to_string(hi) + " out of range [0," + std::to_string(out.n) + ")",
                 hi_col);
      if (lo == hi) sc.error("reflexive cover " + std::to_string(lo) + " < " + std::to_string(hi), lo_col);
      out.covers.push_back({lo, hi});
    }
  }
  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing header");
  return out;
}

}  // namespace

Poset parse_poset(std::string_view text) {
  auto parsed = parse_text(text);
  if (parsed.header != Header::poset) throw ParseError(1, 1, "expected a poset file");
  return poset_from_covers(parsed.n, parsed.covers);
}

Lattice parse_lattice(std::string_view text) {
  auto parsed = parse_text(text);
  if (parsed.header != Header::lattice) throw ParseError(1, 1, "expected a lattice file");
  return lattice_from_covers(parsed.n, parsed.covers);
}

std::variant<Poset, Lattice> parse_structure(std::string_view text) {
  auto parsed = parse_text(text);
  if (parsed.header == Header::poset) return poset_from_covers(parsed.n, parsed.covers);
  return lattice_from_covers(parsed.n, parsed.covers);
}

std::string serialize(const Poset& p) {
  std::ostringstream os;
  os << "poset " << p.size() << '\n';
  for (const auto& e : cover_pairs(p)) os << e.lo << " < " << e.hi << '\n';
  return os.str();
}

std::string serialize(const Lattice& l) {
  std::ostringstream os;
  os << "lattice " << l.size() << '\n';
  for (const auto& e : l.covers()) os << e.lo << " < " << e.hi << '\n';
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Lattice load_lattice(const std::string& path, std::size_t cap) {
  auto s = parse_structure(read_text_file(path));
  if (auto* p = std::get_if<Poset>(&s)) return downset_lattice(*p, cap);
  return std::get<Lattice>(std::move(s));
}

}  // namespace latkit
