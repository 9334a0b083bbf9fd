#pragma once

#include "qg/hopf.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qg {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
};

// Definition document grammar (one directive or entry per line, '#' comments):
//   NAME <text>
//   DIM <n>
//   BASIS <label_0> ... <label_{n-1}>
//   MULT       followed by entries  i j k re im   (coeff of b_k in b_i b_j)
//   COPRODUCT  followed by entries  k i j re im   (coeff of b_i (x) b_j in Delta b_k)
//   STAR       followed by entries  i k re im     (coeff of b_k in (b_i)^*)
//   ANTIPODE   followed by entries  i k re im     (coeff of b_k in S(b_i))
//   COUNIT     followed by entries  i re im
//   HAAR       followed by entries  i re im       (optional section; solved
//                                                  from bi-invariance if absent)
// Unknown section names are rejected. Omitted entries are zero. The algebra
// unit is always derived from MULT.

struct ParsedDefinition {
  FiniteQuantumGroup::Tensors tensors;
  bool haar_given = true;
};

ParsedDefinition parse_definition(std::istream& in);

/// Parses, constructs, and verifies. The axiom gate is mandatory: a document
/// whose tensors violate any Hopf/Haar law fails to load (AxiomFailureError
/// names the law). If HAAR is absent it is recovered from the invariance
/// equations first.
FiniteQuantumGroup load_definition(const std::string& path, const Tolerance& tol = {});
FiniteQuantumGroup load_definition_stream(std::istream& in, const Tolerance& tol = {});

std::string serialize_definition(const FiniteQuantumGroup& g);
void save_definition(const FiniteQuantumGroup& g, const std::string& path);

// Covector files: header "COVECTORS <dim>", then one functional per line as
// 2*dim whitespace-separated reals (re im pairs over the basis).
std::vector<Vec> load_covectors(const std::string& path, int expected_dim);
void save_covectors(const std::vector<Vec>& rows, const std::string& path);

}  // namespace qg
