#pragma once

// Human-readable and JSON forms of the interval-model values, and the small
// reader for form expressions such as "3/2*t^2 + (1/3)dt" or "t ; dt".

#include "bcum/interval_model.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcum {

std::string to_string(const Polynomial& p);
std::string to_string(const PolyForm& a);
/// "(v0, v1; r dt)"
std::string to_string(const Cochain& c);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what);
    /// 0-based offset into the parsed text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Reads a single form. Products are wedge products, so "t*dt" is t dt and
/// "dt*dt" is zero. Coefficients are integers or integer fractions a/b.
PolyForm parse_form(std::string_view text);
/// Reads a ';'-separated tuple of forms. Error positions refer to the whole text.
std::vector<PolyForm> parse_form_tuple(std::string_view text);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const PolyForm& a);
nlohmann::json to_json(const Cochain& c);
PolyForm form_from_json(const nlohmann::json& j);
Cochain cochain_from_json(const nlohmann::json& j);

}  // namespace bcum
