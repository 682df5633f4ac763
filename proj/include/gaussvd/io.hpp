#ifndef GAUSSVD_IO_HPP
#define GAUSSVD_IO_HPP

#include <json.hpp>
#include <string>

#include "gaussvd/pipeline.hpp"

namespace gaussvd {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "gaussvd/1";

/// Reads and parses a JSON file; Errc::parse on I/O or syntax errors.
Json load_json(const std::string& path);

// Parsers take a JSON-pointer-like location used in error messages.
Rational parse_rational_field(const Json& j, const std::string& where);
GaussianRational parse_coefficient(const Json& j, const std::string& where);
LaurentPoly parse_laurent(const Json& j, const std::string& where);
HyperplaneSet parse_hyperplanes(const Json& j, const std::string& where);
AnalysisConfig parse_analysis_config(const Json& j);

Json to_json(const Rational& q);
Json to_json(const GaussianRational& c);
Json to_json(const LaurentPoly& p);
Json to_json(std::complex<double> z);
Json to_json(const Multiplicity& m);

Json weights_to_json(const NochkaWeights& w);
NochkaWeights parse_weights(const Json& j);
Json axioms_to_json(const AxiomReport& rep);
Json theorem_to_json(const TheoremReport& rep);
Json exponents_to_json(const ExponentPack& pack);
Json analysis_to_json(const Analysis& a);
Json metric_to_json(const MetricRun& run);

std::string analysis_summary(const Analysis& a);
std::string metric_summary(const MetricRun& run);

}  // namespace gaussvd

#endif  // GAUSSVD_IO_HPP
