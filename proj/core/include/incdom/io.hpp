#pragma once

// Text formats.
//
//   SetFamily (.sf)   optional '#' comment lines, then
//                     "n=<n> k=<k> count=<m>" and m lines of strictly
//                     increasing 1-based elements, in colex order.
//   Graph (.g)        "n=<n>" then one "u v" line per edge, u < v,
//                     lexicographically sorted.
//   DomPair (.dp)     lower SetFamily section, a line "---", upper section.
//
// Writers emit the canonical form; readers reject duplicates, wrong
// cardinalities, wrong counts and out-of-order lines with a ParseError
// carrying the line number.

#include <iosfwd>
#include <string>

#include "incdom/dompair.hpp"
#include "incdom/graph.hpp"
#include "incdom/set_family.hpp"

namespace incdom::io {

void write_set_family(std::ostream& os, const SetFamily& f);
SetFamily read_set_family(std::istream& is);

void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

void write_dompair(std::ostream& os, const DomPair& d);
DomPair read_dompair(std::istream& is);

std::string to_text(const SetFamily& f);
std::string to_text(const Graph& g);
std::string to_text(const DomPair& d);

SetFamily set_family_from_file(const std::string& path);
Graph graph_from_file(const std::string& path);
DomPair dompair_from_file(const std::string& path);

}  // namespace incdom::io
