#include "omega/cli/format.hpp"

namespace omega::cli {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t)) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw DomainError("expected an integer, got " + j.dump());
}

Json exponent_json(Exponent e) { return e == kExact ? Json(nullptr) : Json(e); }

Json omega_fields(const OmegaNumber& x) {
  Json j;
  j["valuation"] = x.is_zero() ? Json(nullptr) : Json(x.valuation());
  Json coeffs = Json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(Json::array({integer_json(c.get_num()), integer_json(c.get_den())}));
  j["coefficients"] = coeffs;
  j["known_order"] = exponent_json(x.known_order());
  return j;
}

}  // namespace

Json to_json(const OmegaNumber& x) {
  auto j = omega_fields(x);
  j["infinite_moment"] = nullptr;
  return j;
}

Json to_json(const ExtendedOmega& x) {
  auto j = omega_fields(x.prefix());
  if (const auto& m = x.infinite_moment())
    j["infinite_moment"] = Json{{"position", m->position}, {"sign", m->sign}};
  else
    j["infinite_moment"] = nullptr;
  return j;
}

Json to_json(const AlephInt& x) { return to_json(x.to_omega()); }

Json to_json(const Value& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

ExtendedOmega extended_from_json(const Json& j) {
  try {
    const Exponent known = j.at("known_order").is_null() ? kExact : j.at("known_order").get<Exponent>();
    std::vector<Rational> coeffs;
    for (const auto& pair : j.at("coefficients")) {
      Rational c(integer_from_json(pair.at(0)), integer_from_json(pair.at(1)));
      c.canonicalize();
      coeffs.push_back(c);
    }
    const Exponent v = j.at("valuation").is_null() ? 0 : j.at("valuation").get<Exponent>();
    const auto prefix = OmegaNumber::from_dense(v, std::move(coeffs), known);
    const auto& m = j.at("infinite_moment");
    if (m.is_null()) return prefix;
    return ExtendedOmega::with_infinite_moment(prefix, m.at("position").get<Exponent>(), m.at("sign").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed number JSON: ") + e.what());
  }
}

OmegaNumber omega_from_json(const Json& j) {
  const auto x = extended_from_json(j);
  if (x.infinite_moment()) throw DomainError("JSON value has an infinite moment");
  return x.prefix();
}

std::string render(const Value& v, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) return to_json(v).dump();
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

std::string render(const AlephInt& x, OutputFormat fmt) {
  return fmt == OutputFormat::Json ? to_json(x).dump() : to_string(x);
}

}  // namespace omega::cli
