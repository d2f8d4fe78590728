#include "carry/carry_pattern.hpp"

#include <algorithm>
#include <sstream>

#include "carry/error.hpp"

namespace carry {

Ring::Ring(int n, Int p) : n_(n), p_(p) {
  require_prime(p);
  if (n < 1) throw ArgumentError("number of variables must be at least 1");
}

Context::Context(Ring ring, Int degree)
    : ring_(ring), degree_(degree), digits_(degree < 0 ? 0 : degree, ring.p()) {
  if (degree < 0) throw ArgumentError("degree must be nonnegative");
}

Int Context::tail_value(std::size_t i) const {
  Int v = degree_;
  for (std::size_t k = 0; k < i && v > 0; ++k) v /= p();
  return v;
}

CarryPattern::CarryPattern(Context ctx, std::vector<Int> entries)
    : ctx_(std::move(ctx)), entries_(std::move(entries)) {
  if (entries_.size() != ctx_.length()) {
    throw ArgumentError("carry pattern " + format_entries(entries_) + " has length " +
                        std::to_string(entries_.size()) + ", degree " +
                        std::to_string(ctx_.degree()) + " needs " +
                        std::to_string(ctx_.length()));
  }
  for (Int e : entries_) {
    if (e < 0) throw ArgumentError("carry pattern entries must be nonnegative");
  }
}

CarryPattern CarryPattern::checked(Context ctx, std::vector<Int> entries) {
  if (!is_valid_carry(entries, ctx)) {
    throw ArgumentError(format_entries(entries) + " is not a carry pattern in C(" +
                        std::to_string(ctx.degree()) + "," + std::to_string(ctx.n()) + "," +
                        std::to_string(ctx.p()) + ")");
  }
  return CarryPattern(std::move(ctx), std::move(entries));
}

bool operator<(const CarryPattern& a, const CarryPattern& b) {
  const auto& ca = a.context();
  const auto& cb = b.context();
  if (ca.ring() != cb.ring()) return ca.ring() < cb.ring();
  if (ca.degree() != cb.degree()) return ca.degree() < cb.degree();
  return a.entries() < b.entries();
}

std::string format_entries(std::span<const Int> entries) {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  out += ')';
  return out;
}

std::string to_string(const CarryPattern& c) { return format_entries(c.entries()); }

std::vector<Int> parse_entries(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s += ch;
  }
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("expected a parenthesised pattern like (1,0,1), got '" + text + "'");
  }
  std::vector<Int> out;
  const std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad pattern entry '" + item + "' in '" + text + "'");
    }
    out.push_back(std::stoll(item));
  }
  return out;
}

CarryPattern carry_pattern(const Ring& ring, std::span<const Int> b) {
  if (b.size() != static_cast<std::size_t>(ring.n())) {
    throw ArgumentError("exponent vector has " + std::to_string(b.size()) +
                        " entries, ring has " + std::to_string(ring.n()) + " variables");
  }
  for (Int e : b) {
    if (e < 0) throw ArgumentError("exponents must be nonnegative");
  }
  Context ctx(ring, total_degree(b));
  const Int p = ring.p();
  std::vector<Int> rest(b.begin(), b.end());
  std::vector<Int> entries(ctx.length());
  Int carry = 0;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    Int column = carry;
    for (Int& r : rest) {
      column += r % p;
      r /= p;
    }
    carry = column / p;
    entries[j] = carry;
  }
  return CarryPattern(std::move(ctx), std::move(entries));
}

CarryPattern carry_pattern(const Context& ctx, std::span<const Int> b) {
  if (total_degree(b) != ctx.degree()) {
    throw ArgumentError("monomial of degree " + std::to_string(total_degree(b)) +
                        " in a degree " + std::to_string(ctx.degree()) + " context");
  }
  return carry_pattern(ctx.ring(), b);
}

bool is_valid_carry(std::span<const Int> c, const Context& ctx) {
  const std::size_t m = ctx.length();
  if (c.size() != m) return false;
  const Int p = ctx.p();
  const Int cap = static_cast<Int>(ctx.n()) * (p - 1);
  auto entry = [&](std::size_t i) -> Int { return (i >= 1 && i <= m) ? c[i - 1] : 0; };
  for (std::size_t i = 1; i <= m; ++i) {
    if (c[i - 1] < 0 || c[i - 1] > ctx.tail_value(i)) return false;
  }
  for (std::size_t i = 0; i <= m; ++i) {
    const __int128 column = static_cast<__int128>(ctx.digit(i)) +
                            static_cast<__int128>(p) * entry(i + 1) - entry(i);
    if (column < 0 || column > cap) return false;
  }
  return true;
}

namespace {

void require_same_context(const CarryPattern& a, const CarryPattern& b) {
  if (!(a.context() == b.context())) {
    throw ArgumentError("carry patterns " + to_string(a) + " and " + to_string(b) +
                        " live in different contexts");
  }
}

} // namespace

bool leq(const CarryPattern& c, const CarryPattern& c2) {
  require_same_context(c, c2);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.entries()[i] > c2.entries()[i]) return false;
  }
  return true;
}

CarryPattern lcm(const CarryPattern& c, const CarryPattern& c2) {
  require_same_context(c, c2);
  std::vector<Int> out(c.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(c.entries()[i], c2.entries()[i]);
  return CarryPattern(c.context(), std::move(out));
}

CarryPattern gcd(const CarryPattern& c, const CarryPattern& c2) {
  require_same_context(c, c2);
  std::vector<Int> out(c.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(c.entries()[i], c2.entries()[i]);
  return CarryPattern(c.context(), std::move(out));
}

std::vector<CarryPattern> carry_lattice(const Context& ctx) {
  const std::size_t m = ctx.length();
  const Int p = ctx.p();
  const Int cap = static_cast<Int>(ctx.n()) * (p - 1);
  std::vector<std::vector<Int>> found;
  std::vector<Int> c(m, 0);

  // Choose c_M, c_{M-1}, ..., c_1 in turn. With c_{i+1} fixed, the column
  // inequality at i bounds c_i to [d_i + p c_{i+1} - cap, d_i + p c_{i+1}].
  auto descend = [&](auto&& self, std::size_t i, Int above) -> void {
    const Int column = ctx.digit(i) + p * above;
    if (i == 0) {
      if (column <= cap) found.push_back(c);
      return;
    }
    const Int lo = std::max<Int>(0, column - cap);
    const Int hi = std::min(column, ctx.tail_value(i));
    for (Int v = lo; v <= hi; ++v) {
      c[i - 1] = v;
      self(self, i - 1, v);
    }
  };
  descend(descend, m, 0);

  std::sort(found.begin(), found.end());
  std::vector<CarryPattern> out;
  out.reserve(found.size());
  for (auto& e : found) out.emplace_back(ctx, std::move(e));
  return out;
}

CarryPattern min_carry(const Context& ctx) {
  return CarryPattern(ctx, std::vector<Int>(ctx.length(), 0));
}

CarryPattern max_carry(const Context& ctx) {
  if (ctx.n() == 2) {
    // Zeros through position floor(d), ones after.
    const std::size_t m = ctx.length();
    std::vector<Int> c(m, 0);
    const std::size_t fl = floor_stat(ctx.degree(), ctx.p());
    for (std::size_t i = fl + 1; i <= m; ++i) c[i - 1] = 1;
    return CarryPattern(ctx, std::move(c));
  }
  CarryPattern top = min_carry(ctx);
  for (const auto& c : carry_lattice(ctx)) top = lcm(top, c);
  return top;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const Context& ctx) {
  const auto lattice = carry_lattice(ctx);
  const std::size_t size = lattice.size();
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (a == b || !leq(lattice[a], lattice[b])) continue;
      bool covered = true;
      for (std::size_t m = 0; m < size && covered; ++m) {
        if (m == a || m == b) continue;
        if (leq(lattice[a], lattice[m]) && leq(lattice[m], lattice[b])) covered = false;
      }
      if (covered) covers.emplace_back(a, b);
    }
  }
  return covers;
}

std::string hasse_dot(const Context& ctx) {
  const auto lattice = carry_lattice(ctx);
  std::ostringstream out;
  out << "digraph C {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    out << "  n" << i << " [label=\"" << to_string(lattice[i]) << "\"];\n";
  }
  for (const auto& [lo, hi] : hasse_covers(ctx)) {
    out << "  n" << lo << " -> n" << hi << " [dir=none];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<CarryPattern> down_closure(std::span<const CarryPattern> patterns, const Context& ctx) {
  for (const auto& c : patterns) {
    if (!(c.context() == ctx)) throw ArgumentError("pattern " + to_string(c) + " is in another context");
  }
  std::vector<CarryPattern> out;
  for (const auto& candidate : carry_lattice(ctx)) {
    for (const auto& c : patterns) {
      if (leq(candidate, c)) {
        out.push_back(candidate);
        break;
      }
    }
  }
  return out;
}

bool is_order_closed(std::span<const CarryPattern> patterns, const Context& ctx) {
  std::vector<CarryPattern> mine(patterns.begin(), patterns.end());
  std::sort(mine.begin(), mine.end());
  mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
  return mine == down_closure(mine, ctx);
}

std::vector<CarryPattern> maximal_elements(std::span<const CarryPattern> patterns) {
  std::vector<CarryPattern> out;
  for (const auto& c : patterns) {
    bool dominated = false;
    for (const auto& other : patterns) {
      if (!(other == c) && leq(c, other)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Exponents> monomials_with_carry_leq(const CarryPattern& c) {
  const Context& ctx = c.context();
  std::vector<Exponents> out;
  for_each_monomial(ctx.n(), ctx.degree(), [&](const Exponents& b) {
    if (leq(carry_pattern(ctx.ring(), b), c)) out.push_back(b);
  });
  return out;
}

} // namespace carry
