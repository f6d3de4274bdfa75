#pragma once

#include <string>

#include "fusioncox/folding.hpp"
#include "fusioncox/unfolding.hpp"

namespace fusioncox {

// --- rings --------------------------------------------------------------------

// Builtin ring specs: "verlinde:N", "verlinde_even:N", "rep_s3",
// "group_ring:zN", "group_ring:s3", "tambara_yamagami:zN",
// "tensor(SPEC,SPEC)" (nesting allowed).
bool looks_like_ring_spec(const std::string& spec);
RingPtr parse_ring_spec(const std::string& spec);

std::string ring_to_json(const FusionRing& ring);
RingPtr ring_from_json_text(const std::string& text);

// Accepts a builtin spec or a path to a JSON file.
RingPtr load_ring(const std::string& spec);

// --- Coxeter matrices ------------------------------------------------------------

std::string coxeter_to_json(const CoxeterMatrix& coxeter);
CoxeterMatrix coxeter_from_json_text(const std::string& text);

// Graphviz graph with one node per generator and one edge per label != 2;
// labels other than 3 are printed, the infinite label as "inf".
std::string coxeter_to_dot(const CoxeterMatrix& coxeter);

// Minimal reader for the emitter's dialect: quoted node statements, quoted
// "a" -- "b" edge statements with an optional [label="..."] attribute.
CoxeterMatrix coxeter_from_dot(const std::string& text);

// Accepts a builtin spec ("i2:M", "a:N", "affine-a:N", with "inf" for the
// infinite label) or a path to a JSON or DOT file.
CoxeterMatrix load_coxeter(const std::string& spec);

// --- realisations ------------------------------------------------------------------

std::string realisation_to_json(const GeometricRealisation& real);
GeometricRealisation realisation_from_json_text(const std::string& text);
GeometricRealisation load_realisation(const std::string& path);

// --- unfolded systems ------------------------------------------------------------

std::string unfolded_to_json(const UnfoldedSystem& u);
std::string unfolded_to_dot(const UnfoldedSystem& u);

// --- partitions --------------------------------------------------------------------

struct NamedPartition {
  Partition partition;
  std::vector<std::string> fiber_names;  // in order of first appearance
};

// JSON object mapping each vertex name of the graph to its fiber label,
// e.g. {"(1,s0)": "s", "(x,s0)": "s", "(1,s1)": "t", ...}. Every vertex
// must appear exactly once.
NamedPartition partition_from_json_text(const std::string& text, const CoxeterMatrix& graph);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fusioncox
