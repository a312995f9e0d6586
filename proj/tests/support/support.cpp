#include "support.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ontodiv::testing {

std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(ONTODIV_TEST_DATA_DIR) / name;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir(const std::string& tag) {
  static std::random_device rd;
  auto dir = std::filesystem::temp_directory_path() /
             ("ontodiv_" + tag + "_" + std::to_string(rd()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

namespace {

const std::string kNs = "http://example.org/rand#";

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

ClassExpr random_expr(std::mt19937_64& rng, const std::vector<EntityRef>& classes,
                      const std::vector<EntityRef>& props, std::size_t depth) {
  const std::size_t roll = pick(rng, 100);
  if (roll < 45 || (depth == 0 && roll < 85)) {
    return ClassExpr::named(classes[pick(rng, classes.size())]);
  }
  if (roll < 55 || depth == 0) return pick(rng, 2) == 0 ? ClassExpr::thing() : ClassExpr::nothing();
  if (roll < 70) {
    return ClassExpr::intersection({random_expr(rng, classes, props, depth - 1),
                                    random_expr(rng, classes, props, depth - 1)});
  }
  if (roll < 85 || props.empty()) {
    return ClassExpr::union_of({random_expr(rng, classes, props, depth - 1),
                                random_expr(rng, classes, props, depth - 1)});
  }
  return ClassExpr::some(props[pick(rng, props.size())],
                         random_expr(rng, classes, props, depth - 1));
}

}  // namespace

Ontology random_ontology(std::mt19937_64& rng, const RandomOntologySpec& spec) {
  std::vector<EntityRef> classes;
  std::vector<EntityRef> props;
  const std::size_t nc = 1 + pick(rng, spec.max_classes);
  const std::size_t np = pick(rng, spec.max_properties + 1);
  for (std::size_t i = 0; i < nc; ++i) classes.push_back(make_class(kNs + "C" + std::to_string(i)));
  for (std::size_t i = 0; i < np; ++i) props.push_back(make_property(kNs + "r" + std::to_string(i)));

  std::vector<Axiom> axioms;
  for (const auto& c : classes) axioms.emplace_back(Declaration{c});
  for (const auto& p : props) axioms.emplace_back(Declaration{p});
  const std::size_t count = 1 + pick(rng, spec.max_axioms);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t kind = pick(rng, np >= 2 ? 4 : 3);
    if (kind <= 1) {
      axioms.emplace_back(SubClassOf{random_expr(rng, classes, props, spec.max_depth),
                                     random_expr(rng, classes, props, spec.max_depth)});
    } else if (kind == 2) {
      std::vector<ClassExpr> members;
      const std::size_t k = 2 + pick(rng, 2);
      for (std::size_t j = 0; j < k; ++j) {
        members.push_back(random_expr(rng, classes, props, spec.max_depth > 0 ? spec.max_depth - 1 : 0));
      }
      axioms.emplace_back(EquivalentClasses{std::move(members)});
    } else {
      axioms.emplace_back(SubObjectPropertyOf{props[pick(rng, np)], props[pick(rng, np)]});
    }
  }
  return Ontology("http://example.org/rand", std::move(axioms));
}

Signature random_signature(std::mt19937_64& rng, const Ontology& ontology) {
  Signature sig;
  for (const auto& e : ontology.signature()) {
    if (pick(rng, 2) == 0) sig.insert(e);
  }
  return sig;
}

namespace {

// Interpretation over a domain of at most 3 elements: classes are bitmasks
// over the domain, relations are bitmasks over domain x domain.
struct Interpretation {
  int size = 0;
  std::map<std::string, unsigned> classes;
  std::map<std::string, unsigned> relations;
};

unsigned eval(const ClassExpr& c, const Interpretation& in, const Signature& sig) {
  const unsigned all = (1u << in.size) - 1;
  switch (c.kind()) {
    case ClassExpr::Kind::kThing:
      return all;
    case ClassExpr::Kind::kNothing:
      return 0;
    case ClassExpr::Kind::kNamed:
      return sig.contains(c.entity()) ? in.classes.at(c.entity().iri) : 0;
    case ClassExpr::Kind::kIntersection: {
      unsigned out = all;
      for (const auto& m : c.operands()) out &= eval(m, in, sig);
      return out;
    }
    case ClassExpr::Kind::kUnion: {
      unsigned out = 0;
      for (const auto& m : c.operands()) out |= eval(m, in, sig);
      return out;
    }
    case ClassExpr::Kind::kSomeValuesFrom: {
      if (!sig.contains(c.entity())) return 0;
      const unsigned rel = in.relations.at(c.entity().iri);
      const unsigned filler = eval(c.filler(), in, sig);
      unsigned out = 0;
      for (int x = 0; x < in.size; ++x) {
        const unsigned successors = (rel >> (x * in.size)) & all;
        if (successors & filler) out |= 1u << x;
      }
      return out;
    }
  }
  return 0;
}

bool holds(const Axiom& axiom, const Interpretation& in, const Signature& sig) {
  if (const auto* a = std::get_if<SubClassOf>(&axiom)) {
    return (eval(a->sub, in, sig) & ~eval(a->sup, in, sig)) == 0;
  }
  if (const auto* a = std::get_if<EquivalentClasses>(&axiom)) {
    const unsigned first = eval(a->members.front(), in, sig);
    for (const auto& m : a->members) {
      if (eval(m, in, sig) != first) return false;
    }
    return true;
  }
  if (const auto* a = std::get_if<SubObjectPropertyOf>(&axiom)) {
    const unsigned sub = sig.contains(a->sub) ? in.relations.at(a->sub.iri) : 0;
    const unsigned sup = sig.contains(a->sup) ? in.relations.at(a->sup.iri) : 0;
    return (sub & ~sup) == 0;
  }
  return true;
}

}  // namespace

bool semantically_local(const Axiom& axiom, const Signature& sig, int max_domain) {
  if (!is_logical(axiom)) return true;
  std::vector<EntityRef> names;
  for (const auto& e : axiom_signature(axiom)) {
    if (sig.contains(e)) names.push_back(e);
  }
  for (int size = 1; size <= max_domain; ++size) {
    // Odometer over one bitmask per name.
    std::vector<unsigned> limits;
    for (const auto& e : names) {
      limits.push_back(e.kind == EntityKind::kObjectProperty ? 1u << (size * size) : 1u << size);
    }
    std::vector<unsigned> values(names.size(), 0);
    Interpretation in;
    in.size = size;
    while (true) {
      for (std::size_t i = 0; i < names.size(); ++i) {
        (names[i].kind == EntityKind::kObjectProperty ? in.relations : in.classes)[names[i].iri] =
            values[i];
      }
      if (!holds(axiom, in, sig)) return false;
      std::size_t i = 0;
      while (i < values.size() && ++values[i] == limits[i]) values[i++] = 0;
      if (i == values.size()) break;
    }
  }
  return true;
}

}  // namespace ontodiv::testing
