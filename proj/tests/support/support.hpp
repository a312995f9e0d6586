// Shared helpers for the unit and acceptance tests.

#pragma once

#include <cstddef>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "ontodiv/locality.hpp"
#include "ontodiv/ontology.hpp"

namespace ontodiv::testing {

std::filesystem::path data_path(const std::string& name);
std::string read_text(const std::filesystem::path& path);

/// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& tag);

struct RandomOntologySpec {
  std::size_t max_axioms = 8;
  std::size_t max_classes = 3;
  std::size_t max_properties = 2;
  std::size_t max_depth = 2;
};

/// Random ontology over at most max_classes + max_properties names using
/// every supported class constructor.
Ontology random_ontology(std::mt19937_64& rng, const RandomOntologySpec& spec = {});

/// Each entity of `ontology` independently with probability 1/2.
Signature random_signature(std::mt19937_64& rng, const Ontology& ontology);

/// Brute-force semantic bottom-locality: names outside `sig` are read as
/// the empty class/relation, and the axiom must then hold in every
/// interpretation of the remaining names over domains of 1..max_domain
/// elements.
bool semantically_local(const Axiom& axiom, const Signature& sig, int max_domain = 3);

}  // namespace ontodiv::testing
