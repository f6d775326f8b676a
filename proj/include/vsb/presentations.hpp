#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vsb/words.hpp"

namespace vsb {

enum class Catalog { Standard, ReducedStandard, Fusing, ReducedFusing, Pure };

Catalog catalog_from_name(std::string const& name);
std::string catalog_name(Catalog c);
std::vector<Catalog> all_catalogs();

/// True iff g may appear in relations of the catalog.
bool in_alphabet(Catalog c, Generator const& g);
bool in_alphabet(Catalog c, Word const& w);

using RelationParams = std::vector<std::pair<std::string, int>>;

/// lhs = rhs, stored in the orientation it is printed in. `derived` marks
/// instances that are consequences of the listed relations rather than
/// members of the printed presentation.
struct Relation {
  std::string family;
  RelationParams params;
  Word lhs;
  Word rhs;
  bool derived = false;

  std::string describe() const;
};

/// Commuting families extended by the sigma^-1 / mu^-1 kinds.
bool is_derived_family(std::string const& family);

/// Family identifiers of a catalog in enumeration order.
std::vector<std::string> family_names(Catalog c);

/// Every relation instance for strand count n, in a fixed order: families in
/// family_names order, then index tuples in lexicographic order.
std::vector<Relation> instantiate_relations(Catalog c, int strands);

/// Parses "lhs = rhs" in the word grammar into a relation of the given family.
Relation parse_relation(std::string const& text, int strands, std::string family = "custom");

}  // namespace vsb
