#pragma once

#include <optional>
#include <string>

#include "padic/context.hpp"

namespace padic {

/// On-disk document: decimal strings for all big values, coefficients
/// low-to-high. `value` is absent for pure context documents.
struct ElementDocument {
    mpz_class p;
    unsigned n = 0;
    unsigned N = 0;
    std::vector<mpz_class> phi; // length n+1, last entry 1
    std::optional<std::vector<mpz_class>> value;
};

ElementDocument parse_document(const std::string& text); // throws Error(Parse)
std::string serialize_document(const ElementDocument& doc);

CtxPtr context_from_document(const ElementDocument& doc);
UnramElement element_from_document(const ElementDocument& doc);
ElementDocument document_from_element(const UnramElement& e);
ElementDocument document_from_context(const CtxPtr& ctx);

/// JSON array of decimal strings, low-to-high.
std::string serialize_coeff_array(const std::vector<mpz_class>& coeffs);

} // namespace padic
