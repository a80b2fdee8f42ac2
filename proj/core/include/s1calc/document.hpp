#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "s1calc/errors.hpp"
#include "s1calc/morphism.hpp"
#include "s1calc/split.hpp"

namespace s1calc {

// Malformed document; the message starts with the JSON pointer of the culprit.
class DocumentError : public InputError {
 public:
  DocumentError(const std::string& pointer, const std::string& message)
      : InputError(pointer.empty() ? message : pointer + ": " + message), pointer_(pointer) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// The JSON complex format: schema_version "1", truncation, generators
// [{name, degree, part}], operators [{order, entries [{from, to, coeff}]}],
// and unit (a generator name or [{gen, coeff}]). Coefficients are strings.
struct ComplexDocument {
  S1Complex complex;
  std::vector<Part> parts;
  std::optional<SparseVector> unit;

  // Throws InputError when there is no unit.
  SplitS1Complex split() const;
};

// Generators come out sorted by name, entries by (from, to); structural
// problems throw DocumentError. The algebraic relations are not checked here.
ComplexDocument parse_document(std::string_view text);
std::string emit_document(const ComplexDocument& doc);
std::string emit_document(const SplitS1Complex& s);

// Canonical form of a complex: basis sorted by name.
ComplexDocument canonicalize(const ComplexDocument& doc);

// {schema_version, shift, components [{order, entries}]} with generator names
// taken from the source (from) and target (to).
S1Morphism parse_morphism(std::string_view text, const S1Complex& source, const S1Complex& target);
std::string emit_morphism(const S1Morphism& phi);

}  // namespace s1calc
