#include "carry/io.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include <json.hpp>

#include "carry/error.hpp"

namespace carry {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto end = text.find('\n');
    lines.push_back(trim(text.substr(0, end)));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

Int parse_int(std::string_view s, std::string_view what) {
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("expected an integer for " + std::string(what) + ", got '" + std::string(s) + "'");
  }
  return value;
}

// "key=value" pairs on one line; unknown keys are rejected by the caller.
std::map<std::string, std::string, std::less<>> parse_fields(std::string_view line) {
  std::map<std::string, std::string, std::less<>> fields;
  for (auto word : split_words(line)) {
    const auto eq = word.find('=');
    if (eq == std::string_view::npos || eq == 0) throw ParseError("expected key=value, got '" + std::string(word) + "'");
    const std::string key(word.substr(0, eq));
    if (!fields.emplace(key, std::string(word.substr(eq + 1))).second) {
      throw ParseError("field '" + key + "' given twice");
    }
  }
  return fields;
}

std::optional<Ring> parse_ring_header(std::string_view line) {
  const auto words = split_words(line);
  if (words.empty() || words.front() != "ring") return std::nullopt;
  const auto fields = parse_fields(line.substr(line.find("ring") + 4));
  if (fields.size() != 2 || !fields.count("n") || !fields.count("p")) {
    throw ParseError("ring header must be 'ring n=<n> p=<p>'");
  }
  const Int n = parse_int(fields.find("n")->second, "n");
  if (n < 1 || n > 64) throw ParseError("n out of range");
  try {
    return Ring(static_cast<int>(n), parse_int(fields.find("p")->second, "p"));
  } catch (const InvalidCharacteristic& e) {
    throw ParseError(e.what());
  }
}

std::vector<Int> parse_pattern(const std::string& text) {
  try {
    return parse_entries(text);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

CarryIdealLabel label_from_fields(const std::map<std::string, std::string, std::less<>>& fields, const Ring& ring) {
  if (!fields.count("d") || !fields.count("c")) throw ParseError("label needs d=<d> and c=(...)");
  try {
    return CarryIdealLabel(ring, parse_int(fields.find("d")->second, "d"), parse_pattern(fields.find("c")->second));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid label: ") + e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("unexpected JSON shape: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

} // namespace

std::string format_ideal(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "ring n=" << ideal.n() << " p=" << ideal.p() << '\n';
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? " " : "") << g[i];
    out << '\n';
  }
  return out.str();
}

MonomialIdeal parse_ideal(std::string_view text) {
  std::optional<Ring> ring;
  std::vector<Exponents> gens;
  for (auto line : split_lines(text)) {
    if (line.empty()) continue;
    if (!ring) {
      ring = parse_ring_header(line);
      if (!ring) throw ParseError("ideal text must start with 'ring n=<n> p=<p>'");
      continue;
    }
    Exponents g;
    for (auto word : split_words(line)) g.push_back(parse_int(word, "exponent"));
    if (g.size() != static_cast<std::size_t>(ring->n())) {
      throw ParseError("generator '" + std::string(line) + "' does not have " + std::to_string(ring->n()) + " exponents");
    }
    gens.push_back(std::move(g));
  }
  if (!ring) throw ParseError("empty ideal text");
  try {
    return MonomialIdeal(*ring, std::move(gens));
  } catch (const ArgumentError& e) {
    throw ParseError(e.what());
  }
}

std::string format_decomposition(const Decomposition& decomposition) {
  std::string out;
  for (const auto& label : decomposition.labels()) out += to_string(label) + '\n';
  return out;
}

Decomposition parse_decomposition(std::string_view text, std::optional<Ring> ring) {
  std::vector<CarryIdealLabel> labels;
  bool first = true;
  for (auto line : split_lines(text)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (auto header = parse_ring_header(line)) {
        ring = header;
        continue;
      }
    }
    if (!ring) throw ParseError("decomposition needs a ring (header line or explicit)");
    const auto fields = parse_fields(line);
    if (fields.size() != 2) throw ParseError("label line must be 'd=<d> c=(...)'");
    labels.push_back(label_from_fields(fields, *ring));
  }
  if (!ring) throw ParseError("decomposition needs a ring (header line or explicit)");
  return Decomposition(*ring, std::move(labels));
}

std::string format_label(const CarryIdealLabel& label) {
  return "n=" + std::to_string(label.ring().n()) + " p=" + std::to_string(label.ring().p()) + " " + to_string(label);
}

CarryIdealLabel parse_label(std::string_view text) {
  const auto fields = parse_fields(trim(text));
  for (const auto& [key, value] : fields) {
    if (key != "n" && key != "p" && key != "d" && key != "c") throw ParseError("unknown label field '" + key + "'");
  }
  if (!fields.count("p")) throw ParseError("label needs p=<p>");
  const Int n = fields.count("n") ? parse_int(fields.find("n")->second, "n") : 2;
  if (n < 1 || n > 64) throw ParseError("n out of range");
  const Int p = parse_int(fields.find("p")->second, "p");
  try {
    return label_from_fields(fields, Ring(static_cast<int>(n), p));
  } catch (const InvalidCharacteristic& e) {
    throw ParseError(e.what());
  }
}

std::string ideal_to_json(const MonomialIdeal& ideal) {
  json j;
  j["n"] = ideal.n();
  j["p"] = ideal.p();
  j["generators"] = ideal.generators();
  return j.dump();
}

MonomialIdeal ideal_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    return MonomialIdeal(Ring(j.at("n").get<int>(), j.at("p").get<Int>()), j.at("generators").get<std::vector<Exponents>>());
  });
}

std::string decomposition_to_json(const Decomposition& decomposition) {
  json j;
  j["n"] = decomposition.ring().n();
  j["p"] = decomposition.ring().p();
  j["labels"] = json::array();
  for (const auto& label : decomposition.labels()) {
    j["labels"].push_back({{"d", label.degree()}, {"c", label.pattern().entries()}});
  }
  return j.dump();
}

Decomposition decomposition_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    const Ring ring(j.at("n").get<int>(), j.at("p").get<Int>());
    std::vector<CarryIdealLabel> labels;
    for (const auto& item : j.at("labels")) {
      labels.emplace_back(ring, item.at("d").get<Int>(), item.at("c").get<std::vector<Int>>());
    }
    return Decomposition(ring, std::move(labels));
  });
}

std::string betti_to_json(const BettiTable& table) {
  json j;
  j["n"] = table.n();
  j["entries"] = json::array();
  for (const auto& [key, value] : table.entries()) {
    j["entries"].push_back({{"i", key.first}, {"j", key.second}, {"beta", value}});
  }
  j["projective_dimension"] = table.projective_dimension();
  j["regularity"] = table.regularity();
  return j.dump();
}

BettiTable betti_from_json(std::string_view text) {
  const json j = parse_json(text);
  return guarded([&] {
    BettiTable table(j.at("n").get<int>());
    for (const auto& e : j.at("entries")) {
      table.add(e.at("i").get<int>(), e.at("j").get<Int>(), e.at("beta").get<Int>());
    }
    return table;
  });
}

} // namespace carry
