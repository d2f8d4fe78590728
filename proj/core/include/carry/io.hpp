#pragma once

// Text and JSON forms of ideals, decompositions, labels and Betti tables.
//
// Ideal text:          "ring n=<n> p=<p>" then one generator per line, e.g. "7 3 2".
// Decomposition text:  one "d=<d> c=(c1,...,cM)" per line.
// Label text:          "p=<p> d=<d> c=(...)" with an optional "n=<n>" (default 2).
//
// Every parser throws ParseError on malformed input. Writers emit canonical
// order; readers accept any order.

#include <optional>
#include <string>
#include <string_view>

#include "carry/betti_table.hpp"
#include "carry/invariant_ideal.hpp"

namespace carry {

std::string format_ideal(const MonomialIdeal& ideal);
MonomialIdeal parse_ideal(std::string_view text);

std::string format_decomposition(const Decomposition& decomposition);
/// A leading "ring n=<n> p=<p>" line, if present, names the ring; otherwise
/// ring must be given.
Decomposition parse_decomposition(std::string_view text, std::optional<Ring> ring = std::nullopt);

/// "n=<n> p=<p> d=<d> c=(...)"
std::string format_label(const CarryIdealLabel& label);
CarryIdealLabel parse_label(std::string_view text);

std::string ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(std::string_view text);

std::string decomposition_to_json(const Decomposition& decomposition);
Decomposition decomposition_from_json(std::string_view text);

/// {"n":..,"entries":[{"i":..,"j":..,"beta":..},..],"projective_dimension":..,"regularity":..}
std::string betti_to_json(const BettiTable& table);
BettiTable betti_from_json(std::string_view text);

} // namespace carry
