#include "gradering/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gradering/errors.hpp"

namespace gradering {

namespace {

const Json& need(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field))
    fail("InvalidJson", std::string("missing field \"") + field + "\"");
  return j.at(field);
}

int need_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    fail("InvalidJson", std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> need_int_list(const Json& j, const char* what) {
  if (!j.is_array())
    fail("InvalidJson", std::string(what) + " must be a list of integers");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(need_int(v, what));
  return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("InvalidJson", "cannot open file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("InvalidJson", path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail("InvalidJson", "cannot write file " + tmp.string());
    out << j.dump(2) << "\n";
  }
  fs::rename(tmp, target);
}

FiniteGroup parse_group(const Json& j, const Limits& limits) {
  if (!j.is_object()) fail("InvalidJson", "group must be an object");
  FiniteGroup g = [&] {
    if (j.contains("name")) {
      if (!j.at("name").is_string())
        fail("InvalidJson", "group name must be a string");
      return FiniteGroup::named(j.at("name").get<std::string>());
    }
    if (!j.contains("cayley"))
      fail("InvalidJson", "group needs either \"name\" or \"cayley\"");
    const Json& table = j.at("cayley");
    if (!table.is_array()) fail("InvalidJson", "cayley must be a table");
    std::vector<std::vector<int>> rows;
    for (const auto& row : table)
      rows.push_back(need_int_list(row, "cayley row entry"));
    return FiniteGroup::from_table(rows);
  }();
  if (j.contains("identity") &&
      need_int(j.at("identity"), "identity") != g.identity())
    fail("NotAGroup", "declared identity " + j.at("identity").dump() +
                          " is not the neutral element (found " +
                          std::to_string(g.identity()) + ")");
  if (g.order() > static_cast<int>(limits.max_group_order))
    fail("OrderCapExceeded", "group order " + std::to_string(g.order()) +
                                 " exceeds the cap of " +
                                 std::to_string(limits.max_group_order));
  return g;
}

Json group_to_json(const FiniteGroup& g) {
  Json out;
  out["cayley"] = g.cayley();
  out["identity"] = g.identity();
  return out;
}

RingSpec parse_ring_spec(const Json& j) {
  RingSpec spec;
  spec.additive_orders =
      need_int_list(need(j, "additive_orders"), "additive_orders entry");
  spec.unity = need_int_list(need(j, "unity"), "unity entry");
  const Json& mul = need(j, "mul");
  if (!mul.is_array()) fail("InvalidJson", "mul must be a table");
  for (const auto& row : mul) {
    if (!row.is_array()) fail("InvalidJson", "mul row must be a list");
    std::vector<RingElement> out_row;
    for (const auto& cell : row)
      out_row.push_back(need_int_list(cell, "mul entry"));
    spec.mul.push_back(std::move(out_row));
  }
  return spec;
}

FiniteRing parse_ring(const Json& j, const Limits& limits) {
  RingSpec spec = parse_ring_spec(j);
  std::uint64_t order = 1;
  for (int m : spec.additive_orders) {
    if (m < 1) fail("EmptyOrders", "additive orders must be positive");
    order *= static_cast<std::uint64_t>(m);
    if (order > limits.max_ring_order)
      fail("OrderCapExceeded", "ring order exceeds the cap of " +
                                   std::to_string(limits.max_ring_order));
  }
  return FiniteRing::from_spec(std::move(spec));
}

Json ring_to_json(const FiniteRing& r) {
  Json out;
  out["additive_orders"] = r.additive_orders();
  out["unity"] = r.unity();
  Json mul = Json::array();
  for (const auto& row : r.spec().mul) {
    Json jrow = Json::array();
    for (const auto& cell : row) jrow.push_back(cell);
    mul.push_back(std::move(jrow));
  }
  out["mul"] = std::move(mul);
  return out;
}

Grading parse_grading(const Json& j, const FiniteRing& ring,
                      const Limits& limits) {
  Grading grading{parse_group(need(j, "group"), limits), {}};
  const Json& comps = need(j, "components");
  if (!comps.is_object())
    fail("InvalidJson", "components must map group indices to generators");
  for (const auto& [key, val] : comps.items()) {
    int g = 0;
    try {
      std::size_t used = 0;
      g = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail("UnknownGroupElement",
           "component key \"" + key + "\" is not a group element index");
    }
    if (!val.is_array())
      fail("InvalidJson", "component generators must be a list");
    std::vector<RingElement> gens;
    for (const auto& e : val) {
      RingElement x(need_int_list(e, "generator entry"));
      ring.check_element(x);
      gens.push_back(std::move(x));
    }
    grading.component_generators[g] = std::move(gens);
  }
  return grading;
}

Json grading_to_json(const Grading& g) {
  Json out;
  out["group"] = group_to_json(g.group);
  Json comps = Json::object();
  for (const auto& [key, gens] : g.component_generators) {
    Json list = Json::array();
    for (const auto& x : gens) list.push_back(x);
    comps[std::to_string(key)] = std::move(list);
  }
  out["components"] = std::move(comps);
  return out;
}

GradedRing parse_graded_ring(const Json& j, const Limits& limits) {
  FiniteRing ring = parse_ring(need(j, "ring"), limits);
  Grading grading = parse_grading(need(j, "grading"), ring, limits);
  return GradedRing::validate(std::move(ring), std::move(grading));
}

Json graded_ring_to_json(const GradedRing& gr) {
  Json out;
  out["ring"] = ring_to_json(gr.ring());
  out["grading"] = grading_to_json(gr.grading());
  return out;
}

SymbolicGradedRing parse_symbolic(const Json& j, const Limits& limits) {
  const Json& kind = need(j, "kind");
  if (!kind.is_string() ||
      (kind.get<std::string>() != "laurent" &&
       kind.get<std::string>() != "polynomial"))
    fail("InvalidJson", "kind must be \"laurent\" or \"polynomial\"");
  return SymbolicGradedRing{
      parse_ring(need(j, "base"), limits),
      kind.get<std::string>() == "laurent" ? SymbolicKind::Laurent
                                           : SymbolicKind::Polynomial};
}

Json symbolic_to_json(const SymbolicGradedRing& s) {
  Json out;
  out["kind"] = s.kind == SymbolicKind::Laurent ? "laurent" : "polynomial";
  out["base"] = ring_to_json(s.base);
  return out;
}

RingElement parse_element(const Json& j, const FiniteRing& ring) {
  RingElement x(need_int_list(j, "element entry"));
  ring.check_element(x);
  return x;
}

Json element_to_json(const RingElement& x) { return Json(x); }

Json limits_to_json(const Limits& l) {
  Json out;
  out["max_ring_order"] = l.max_ring_order;
  out["max_group_order"] = l.max_group_order;
  out["ideal_lattice_cap"] = l.ideal_lattice_cap;
  out["similarity_budget"] = l.similarity_budget;
  return out;
}

ConstructResult run_construct(const Json& spec, const Limits& limits) {
  const Json& kind = need(spec, "construct");
  if (!kind.is_string()) fail("InvalidJson", "construct must be a string");
  std::string k = kind.get<std::string>();
  ConstructResult out;
  if (k == "laurent" || k == "polynomial") {
    out.symbolic = SymbolicGradedRing{
        parse_ring(need(spec, "base"), limits),
        k == "laurent" ? SymbolicKind::Laurent : SymbolicKind::Polynomial};
    return out;
  }
  if (k == "truncated_poly") {
    FiniteRing base = parse_ring(need(spec, "base"), limits);
    int m = need_int(need(spec, "m"), "m");
    out.graded = truncated_polynomial(base, m, limits);
    return out;
  }
  if (k == "trivial_extension") {
    GradedRing base = parse_graded_ring(need(spec, "base"), limits);
    int degree = need_int(need(spec, "module_degree"), "module_degree");
    GradedBimodule mod = self_bimodule(base, degree);
    out.graded = trivial_extension(base, mod, limits);
    return out;
  }
  if (k == "group_ring") {
    GradedRing base = parse_graded_ring(need(spec, "base"), limits);
    out.graded = group_ring_graded(base, limits);
    return out;
  }
  if (k == "group_ring_coarse") {
    GradedRing base = parse_graded_ring(need(spec, "base"), limits);
    std::vector<int> h =
        need_int_list(need(spec, "subgroup"), "subgroup entry");
    out.graded = group_ring_coarse(base, h, limits).graded;
    return out;
  }
  if (k == "matrix") {
    GradedRing base = parse_graded_ring(need(spec, "base"), limits);
    MatrixGradingSpec ms;
    ms.n = need_int(need(spec, "n"), "n");
    ms.sigma = need_int_list(need(spec, "sigma"), "sigma entry");
    out.graded = matrix_graded(base, ms, limits);
    return out;
  }
  fail("InvalidJson", "unknown construct \"" + k + "\"");
}

namespace {

std::string scalar_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_value(std::ostringstream& out, const std::string& key,
                  const Json& v, int depth);

void render_object(std::ostringstream& out, const Json& obj, int depth) {
  for (const auto& [key, v] : obj.items()) render_value(out, key, v, depth);
}

bool is_row_table(const Json& arr) {
  if (!arr.is_array() || arr.empty()) return false;
  for (const auto& row : arr) {
    if (!row.is_object()) return false;
    for (const auto& [k, v] : row.items()) {
      (void)k;
      if (v.is_object() || (v.is_array() && !v.empty() && !v[0].is_number()))
        return false;
    }
  }
  return true;
}

void render_table(std::ostringstream& out, const Json& arr) {
  // Identifying columns first, then tallies, then free-text; leftovers keep
  // their alphabetical order at the end.
  static const char* kPreferred[] = {
      "id",        "instance",   "theorem",    "anchor",  "outcome",
      "instances", "non-vacuous", "violations", "skipped", "runtime-ms",
      "element",   "degree",     "detail",     "reason"};
  std::vector<std::string> cols;
  for (const auto& [k, v] : arr[0].items()) {
    (void)v;
    cols.push_back(k);
  }
  std::vector<std::string> ordered;
  for (const char* p : kPreferred) {
    auto it = std::find(cols.begin(), cols.end(), p);
    if (it != cols.end()) {
      ordered.push_back(*it);
      cols.erase(it);
    }
  }
  ordered.insert(ordered.end(), cols.begin(), cols.end());
  cols = std::move(ordered);
  out << "|";
  for (const auto& c : cols) out << " " << c << " |";
  out << "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& row : arr) {
    out << "|";
    for (const auto& c : cols)
      out << " " << (row.contains(c) ? scalar_string(row.at(c)) : "") << " |";
    out << "\n";
  }
  out << "\n";
}

void render_value(std::ostringstream& out, const std::string& key,
                  const Json& v, int depth) {
  if (v.is_object()) {
    out << std::string(depth + 2, '#') << " " << key << "\n\n";
    render_object(out, v, depth + 1);
    return;
  }
  if (is_row_table(v)) {
    out << std::string(depth + 2, '#') << " " << key << "\n\n";
    render_table(out, v);
    return;
  }
  out << "- **" << key << "**: " << scalar_string(v) << "\n";
}

}  // namespace

std::string report_markdown(const Json& report) {
  std::ostringstream out;
  std::string title = report.contains("command")
                          ? report.at("command").get<std::string>()
                          : "report";
  out << "# gradering " << title << "\n\n";
  if (report.is_object()) render_object(out, report, 0);
  return out.str();
}

// ---------------------------------------------------------------------------
// Corpus specs.

CorpusSpec parse_corpus_spec(const Json& j) {
  if (!j.is_object()) fail("InvalidJson", "corpus spec must be an object");
  CorpusSpec s;
  for (const auto& [key, v] : j.items()) {
    if (key == "generators") {
      if (!v.is_object())
        fail("InvalidJson", "generators must be an object of booleans");
      for (const auto& [name, flag] : v.items()) {
        if (!flag.is_boolean())
          fail("InvalidJson", "generators." + name + " must be a boolean");
        bool b = flag.get<bool>();
        if (name == "cyclic") s.generators.cyclic = b;
        else if (name == "truncated") s.generators.truncated = b;
        else if (name == "trivial_extensions") s.generators.trivial_extensions = b;
        else if (name == "matrix") s.generators.matrix = b;
        else if (name == "group_rings") s.generators.group_rings = b;
        else if (name == "products") s.generators.products = b;
        else if (name == "quotients") s.generators.quotients = b;
        else fail("InvalidJson", "generators." + name + " is not a generator");
      }
    } else if (key == "cyclic_max") {
      s.cyclic_max = need_int(v, "cyclic_max");
    } else if (key == "matrix_base_max_order") {
      s.matrix_base_max_order = need_int(v, "matrix_base_max_order");
    } else if (key == "max_ring_order") {
      s.limits.max_ring_order = need_int(v, "max_ring_order");
    } else if (key == "max_group_order") {
      s.limits.max_group_order = need_int(v, "max_group_order");
    } else if (key == "ideal_lattice_cap") {
      s.limits.ideal_lattice_cap = need_int(v, "ideal_lattice_cap");
    } else if (key == "seed") {
      s.seed = need_int(v, "seed");
    } else {
      fail("InvalidJson", key + " is not a corpus spec field");
    }
  }
  return s;
}

Json corpus_spec_to_json(const CorpusSpec& s) {
  Json g;
  g["cyclic"] = s.generators.cyclic;
  g["truncated"] = s.generators.truncated;
  g["trivial_extensions"] = s.generators.trivial_extensions;
  g["matrix"] = s.generators.matrix;
  g["group_rings"] = s.generators.group_rings;
  g["products"] = s.generators.products;
  g["quotients"] = s.generators.quotients;
  Json out;
  out["generators"] = g;
  out["cyclic_max"] = s.cyclic_max;
  out["matrix_base_max_order"] = s.matrix_base_max_order;
  out["max_ring_order"] = s.limits.max_ring_order;
  out["max_group_order"] = s.limits.max_group_order;
  out["ideal_lattice_cap"] = s.limits.ideal_lattice_cap;
  out["seed"] = s.seed;
  return out;
}

// ---------------------------------------------------------------------------
// Reports.

Json nil_good_witness_to_json(const NilGoodWitness& w) {
  Json out;
  if (w.kind == NilGoodWitness::Kind::Nilpotent) {
    out["kind"] = "nilpotent";
  } else {
    out["kind"] = "unit+nilpotent";
    out["unit"] = element_to_json(*w.unit_part);
  }
  out["nilpotent"] = element_to_json(w.nilpotent_part);
  out["nilpotency_index"] = w.nilpotency_index;
  return out;
}

Json witness_bundle_to_json(const GradedRing& gr,
                            const std::optional<RingElement>& element,
                            const std::optional<int>& degree) {
  Json out;
  out["graded_ring"] = graded_ring_to_json(gr);
  if (element) out["element"] = element_to_json(*element);
  if (degree) out["degree"] = *degree;
  return out;
}

namespace {

Json bitset_section(const FiniteRing& ring, const Bitset& set,
                    std::size_t elide_above) {
  Json out;
  out["size"] = set.count();
  if (set.count() <= elide_above) {
    Json elems = Json::array();
    for (std::uint64_t idx : set.to_indices())
      elems.push_back(element_to_json(ring.element_at(idx)));
    out["elements"] = elems;
  } else {
    out["elided"] = true;
  }
  return out;
}

Json predicate_counterexample(const PredicateReport& p) {
  Json out;
  out["element"] = element_to_json(*p.counterexample);
  if (p.counterexample_degree) out["degree"] = *p.counterexample_degree;
  return out;
}

}  // namespace

Json classify_report(GradedAnalysis& analysis, std::size_t elide_above) {
  const GradedRing& gr = analysis.graded();
  const FiniteRing& ring = analysis.ring();
  Json out;
  out["degenerate"] = ring.is_degenerate();

  Json rj;
  rj["order"] = ring.order();
  rj["rank"] = ring.rank();
  rj["additive_orders"] = Json(ring.additive_orders());
  rj["characteristic"] = ring.characteristic();
  rj["commutative"] = analysis.is_commutative();
  out["ring"] = rj;

  Json gJ;
  gJ["group_order"] = gr.group().order();
  gJ["support"] = Json(gr.support());
  Json sizes;
  std::uint64_t total = 0;
  for (int g : gr.support()) {
    std::uint64_t n = gr.component_bitset(g).count();
    sizes[std::to_string(g)] = n;
    total += n;
  }
  gJ["component_sizes"] = sizes;
  gJ["homogeneous_total"] = total;
  gJ["homogeneous_distinct"] = gr.homogeneous_count();
  out["grading"] = gJ;

  const PredicateReport& gng = analysis.graded_nil_good();
  out["is_graded_nil_good"] = gng.holds;
  if (!gng.holds)
    out["graded_nil_good_counterexample"] = predicate_counterexample(gng);
  const PredicateReport& fine = analysis.graded_fine();
  out["is_graded_fine"] = fine.holds;
  if (!fine.holds)
    out["graded_fine_counterexample"] = predicate_counterexample(fine);
  const PredicateReport& ng = analysis.nil_good();
  out["is_nil_good"] = ng.holds;
  if (!ng.holds)
    out["nil_good_counterexample"] = predicate_counterexample(ng);
  const PredicateReport& ing = analysis.identity_nil_good();
  out["is_identity_nil_good"] = ing.holds;
  if (!ing.holds)
    out["identity_nil_good_counterexample"] = predicate_counterexample(ing);
  out["is_identity_nil_clean"] = analysis.identity_nil_clean();
  out["is_graded_local"] = analysis.graded_local();
  out["is_jg_graded_nil"] = analysis.jg_graded_nil();

  out["units"] = analysis.classes().units.count();
  out["nilpotents"] = analysis.classes().nilpotents.count();
  out["idempotents"] = analysis.classes().idempotents.count();
  out["graded_maximal_right_ideals"] = analysis.maximal_ideal_indices().size();
  out["jacobson"] = bitset_section(ring, analysis.jacobson(), elide_above);
  out["graded_jacobson"] =
      bitset_section(ring, analysis.graded_jacobson(), elide_above);

  const auto& witnesses = analysis.graded_witnesses();
  if (witnesses.size() <= elide_above) {
    Json rows = Json::array();
    for (const auto& we : witnesses) {
      Json row;
      row["element"] = element_to_json(we.element);
      row["degree"] = we.degree;
      row["witness"] =
          we.witness ? nil_good_witness_to_json(*we.witness) : Json(nullptr);
      rows.push_back(std::move(row));
    }
    out["witnesses"] = rows;
  } else {
    out["witnesses_elided"] = true;
  }
  return out;
}

namespace {

Json trace_to_json(const std::vector<SymbolicTraceLine>& trace) {
  Json out = Json::array();
  for (const auto& line : trace) out.push_back(line.fact);
  return out;
}

std::string symbolic_witness_string(const SymbolicDecision& d) {
  std::ostringstream os;
  if (d.witness_coefficient) {
    os << "[";
    for (std::size_t i = 0; i < d.witness_coefficient->size(); ++i) {
      if (i) os << ",";
      os << (*d.witness_coefficient)[i];
    }
    os << "]";
  } else {
    os << "?";
  }
  os << "*X^" << (d.witness_exponent ? *d.witness_exponent : 0);
  return os.str();
}

}  // namespace

Json classify_symbolic_report(const SymbolicGradedRing& s) {
  Json out;
  out["kind"] = s.kind == SymbolicKind::Laurent ? "laurent" : "polynomial";
  out["base"] = ring_to_json(s.base);
  out["degenerate"] = s.base.is_degenerate();

  SymbolicDecision gng = symbolic_is_graded_nil_good(s);
  out["is_graded_nil_good"] = gng.holds;
  if (!gng.holds) out["graded_nil_good_witness"] = symbolic_witness_string(gng);
  out["graded_nil_good_argument"] = trace_to_json(gng.trace);

  SymbolicDecision fine = symbolic_is_graded_fine(s);
  out["is_graded_fine"] = fine.holds;
  if (!fine.holds) out["graded_fine_witness"] = symbolic_witness_string(fine);

  ElementClasses classes = element_classes(s.base);
  Bitset full(s.base.order());
  for (std::uint64_t i = 0; i < s.base.order(); ++i) full.set(i);
  out["is_identity_nil_good"] = nil_good_in(s.base, classes, full).holds;
  out["is_identity_nil_clean"] = nil_clean_in(s.base, classes, full);
  out["is_commutative"] = s.base.is_commutative();

  if (s.base.is_degenerate()) {
    out["is_nil_good"] = true;
    out["nil_good_note"] = "the zero ring is nil-good";
  } else if (s.kind == SymbolicKind::Laurent &&
             is_finite_field(s.base, classes)) {
    LaurentCounterwitness cw = symbolic_laurent_nil_good_counterwitness(s);
    out["is_nil_good"] = false;
    out["nil_good_witness"] = cw.element;
    out["nil_good_argument"] = trace_to_json(cw.argument);
  } else if (s.kind == SymbolicKind::Polynomial &&
             is_finite_field(s.base, classes)) {
    out["is_nil_good"] = false;
    out["nil_good_witness"] = "X";
    out["nil_good_argument"] = Json::array(
        {"over a finite field the polynomial ring is a domain: nilpotents "
         "are {0} and units are the nonzero constants",
         "X - u is never nilpotent for a unit u, so X is not nil-good"});
  } else {
    out["is_nil_good"] = nullptr;
    out["nil_good_note"] =
        "undecided symbolically: the whole-ring verdict is only derived "
        "over finite fields";
  }
  return out;
}

Json theorem_report_to_json(const TheoremReport& rep, bool with_timings) {
  Json out;
  out["id"] = rep.spec.id;
  out["anchor"] = rep.spec.anchor;
  out["scope_note"] = rep.spec.scope;
  out["hypothesis"] = rep.spec.hypothesis;
  out["conclusion"] = rep.spec.conclusion;
  out["instances"] = rep.instances;
  out["non_vacuous"] = rep.non_vacuous;
  out["violations"] = rep.violations;
  out["skipped"] = rep.skipped;
  out["paper_discrepancy"] = false;
  Json rows = Json::array();
  for (const auto& o : rep.outcomes) {
    Json row;
    row["instance"] = o.instance;
    row["outcome"] = o.outcome;
    row["detail"] = o.detail;
    if (o.witness_ring)
      row["witness"] = witness_bundle_to_json(*o.witness_ring,
                                              o.witness_element,
                                              o.witness_degree);
    rows.push_back(std::move(row));
  }
  out["outcomes"] = rows;
  if (with_timings) out["runtime_ms"] = rep.runtime_ms;
  return out;
}

Json suite_report_to_json(const SuiteReport& suite, bool with_timings) {
  Json out;
  out["command"] = "verify";
  out["finitizations"] = Json(suite.finitizations);
  Json corpus;
  corpus["size"] = suite.corpus_size;
  Json skipped = Json::array();
  for (const auto& [name, reason] : suite.corpus_skipped) {
    Json row;
    row["name"] = name;
    row["reason"] = reason;
    skipped.push_back(std::move(row));
  }
  corpus["skipped"] = skipped;
  out["corpus"] = corpus;
  Json theorems = Json::array();
  for (const auto& t : suite.theorems)
    theorems.push_back(theorem_report_to_json(t, with_timings));
  out["theorems"] = theorems;
  out["violations_total"] = suite.violations_total;
  if (with_timings) out["runtime_ms"] = suite.runtime_ms;
  return out;
}

Json suite_report_markdown_view(const SuiteReport& suite) {
  Json out;
  out["command"] = "verify";
  std::string fin;
  for (const auto& note : suite.finitizations) {
    if (!fin.empty()) fin += "; ";
    fin += note;
  }
  out["finitizations"] = fin;
  Json corpus;
  corpus["size"] = suite.corpus_size;
  corpus["skipped"] = suite.corpus_skipped.size();
  out["corpus"] = corpus;
  Json table = Json::array();
  for (const auto& t : suite.theorems) {
    Json row;
    row["id"] = t.spec.id;
    row["anchor"] = t.spec.anchor.substr(0, t.spec.anchor.find(':'));
    row["instances"] = t.instances;
    row["non-vacuous"] = t.non_vacuous;
    row["violations"] = t.violations;
    row["skipped"] = t.skipped;
    row["runtime-ms"] = static_cast<std::int64_t>(t.runtime_ms + 0.5);
    table.push_back(std::move(row));
  }
  out["theorems"] = table;
  Json violated = Json::array();
  for (const auto& t : suite.theorems)
    for (const auto& o : t.outcomes)
      if (o.outcome == "VIOLATED") {
        Json row;
        row["theorem"] = t.spec.id;
        row["instance"] = o.instance;
        row["detail"] = o.detail;
        violated.push_back(std::move(row));
      }
  if (!violated.empty()) out["violated"] = violated;
  out["violations_total"] = suite.violations_total;
  return out;
}

Json search_outcome_to_json(const SearchOutcome& outcome) {
  Json out;
  out["command"] = "search";
  Json imp;
  imp["hypothesis"] = outcome.hypothesis;
  imp["conclusion"] = outcome.conclusion;
  out["implication"] = imp;
  out["found"] = outcome.found;
  if (outcome.found) {
    Json w;
    w["kind"] = outcome.kind;
    w["instance"] = outcome.instance;
    if (outcome.ring) {
      w["graded_ring"] = graded_ring_to_json(*outcome.ring);
      if (outcome.element) w["element"] = element_to_json(*outcome.element);
      if (outcome.degree) w["degree"] = *outcome.degree;
    }
    if (outcome.symbolic) {
      w["symbolic"] = symbolic_to_json(*outcome.symbolic);
      w["element"] = outcome.symbolic_element;
    }
    if (!outcome.argument.empty()) w["argument"] = Json(outcome.argument);
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  out["notes"] = Json(outcome.notes);
  return out;
}

Json example_audit_to_json(const ExampleAudit& audit) {
  Json out;
  out["command"] = "audit";
  out["example"] = audit.example;
  out["paper_claim"] = audit.paper_claim;
  out["element"] = element_to_json(audit.element);
  out["element_degree"] = audit.element_degree;
  out["element_graded_nil_good"] = audit.element_graded_nil_good;
  out["graded_witness"] = audit.graded_witness
                              ? nil_good_witness_to_json(*audit.graded_witness)
                              : Json(nullptr);
  out["plain_witness"] = audit.plain_witness
                             ? nil_good_witness_to_json(*audit.plain_witness)
                             : Json(nullptr);
  out["ring_graded_nil_good"] = audit.ring_graded_nil_good;
  out["ring_nil_good"] = audit.ring_nil_good;
  out["ring_counterexample"] =
      audit.ring_counterexample ? element_to_json(*audit.ring_counterexample)
                                : Json(nullptr);
  if (audit.ring_counterexample_degree)
    out["ring_counterexample_degree"] = *audit.ring_counterexample_degree;
  out["paper_discrepancy"] = audit.paper_discrepancy;
  out["notes"] = Json(audit.notes);
  return out;
}

}  // namespace gradering
