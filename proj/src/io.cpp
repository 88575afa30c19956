#include "padic/io.hpp"

#include <json.hpp>

namespace padic {

namespace {

using nlohmann::json;

mpz_class parse_decimal(const json& j, const char* what) {
    if (!j.is_string()) fail(ErrorCode::Parse, std::string(what) + " must be a decimal string");
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty()) fail(ErrorCode::Parse, std::string(what) + " is empty");
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) fail(ErrorCode::Parse, std::string(what) + " is not a decimal integer");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            fail(ErrorCode::Parse, std::string(what) + " is not a decimal integer");
    return mpz_class(s, 10);
}

std::vector<mpz_class> parse_coeff_array(const json& j, const char* what) {
    if (!j.is_array()) fail(ErrorCode::Parse, std::string(what) + " must be an array");
    std::vector<mpz_class> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(parse_decimal(item, what));
    return out;
}

json coeff_array_json(const std::vector<mpz_class>& coeffs) {
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(c.get_str());
    return arr;
}

} // namespace

ElementDocument parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::Parse, "invalid JSON document");
    if (!j.is_object()) fail(ErrorCode::Parse, "document must be a JSON object");
    ElementDocument doc;
    if (!j.contains("p") || !j.contains("n") || !j.contains("N") || !j.contains("phi"))
        fail(ErrorCode::Parse, "document requires p, n, N, phi");
    doc.p = parse_decimal(j["p"], "p");
    if (!j["n"].is_number_unsigned()) fail(ErrorCode::Parse, "n must be a non-negative integer");
    if (!j["N"].is_number_unsigned()) fail(ErrorCode::Parse, "N must be a non-negative integer");
    doc.n = j["n"].get<unsigned>();
    doc.N = j["N"].get<unsigned>();
    doc.phi = parse_coeff_array(j["phi"], "phi");
    if (j.contains("value")) doc.value = parse_coeff_array(j["value"], "value");
    return doc;
}

std::string serialize_document(const ElementDocument& doc) {
    json j;
    j["p"] = doc.p.get_str();
    j["n"] = doc.n;
    j["N"] = doc.N;
    j["phi"] = coeff_array_json(doc.phi);
    if (doc.value) j["value"] = coeff_array_json(*doc.value);
    return j.dump();
}

CtxPtr context_from_document(const ElementDocument& doc) {
    if (doc.phi.size() != doc.n + 1) fail(ErrorCode::Parse, "phi must have n+1 coefficients");
    ModulusPtr m = Modulus::make(doc.p, doc.N);
    return RingContext::create(doc.p, doc.n, doc.N, DensePoly(doc.phi, m));
}

UnramElement element_from_document(const ElementDocument& doc) {
    if (!doc.value) fail(ErrorCode::Parse, "document has no value");
    if (doc.value->size() > doc.n) fail(ErrorCode::Parse, "value has more than n coefficients");
    return element_from_coeffs(context_from_document(doc), *doc.value);
}

ElementDocument document_from_element(const UnramElement& e) {
    ElementDocument doc = document_from_context(e.context());
    doc.value = e.coeff_vector();
    return doc;
}

ElementDocument document_from_context(const CtxPtr& ctx) {
    ElementDocument doc;
    doc.p = ctx->p();
    doc.n = ctx->n();
    doc.N = ctx->precision();
    doc.phi = ctx->phi().coeffs();
    return doc;
}

std::string serialize_coeff_array(const std::vector<mpz_class>& coeffs) {
    return coeff_array_json(coeffs).dump();
}

} // namespace padic
