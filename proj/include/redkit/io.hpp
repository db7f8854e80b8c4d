#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "redkit/instances.hpp"

namespace redkit {

enum class Format { dimacs_cnf, setsys, graph, subsetsum, circuit };

Format format_from_name(std::string_view name);  // throws ParameterError on unknown name
std::string_view format_name(Format f);

using Instance =
    std::variant<CnfFormula, SetSystem, Graph, SubsetSumInstance, VspCircuit>;

// Parsers throw ParseError naming the offending line. Parsed instances are
// canonicalized, so serialize(parse(text)) is the canonical form of text and
// parse(serialize(x)) == x.
CnfFormula parse_cnf(const std::string& text);
SetSystem parse_set_system(const std::string& text);
Graph parse_graph(const std::string& text);
SubsetSumInstance parse_subset_sum(const std::string& text);
VspCircuit parse_circuit(const std::string& text);

Instance parse_instance(Format format, const std::string& text);

std::string serialize(const CnfFormula& f);
std::string serialize(const SetSystem& s);
std::string serialize(const Graph& g);
std::string serialize(const SubsetSumInstance& s);
std::string serialize(const VspCircuit& c);

std::string serialize_instance(const Instance& inst);
Format instance_format(const Instance& inst);

}  // namespace redkit
