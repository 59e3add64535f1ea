#pragma once

#include <string>
#include <vector>

#include "qflab/e2_page.hpp"
#include "qflab/experiments.hpp"
#include "qflab/linking.hpp"

namespace qf {

/// JSON codecs for the wire formats. Output is hand-rolled with numbers
/// printed at 17 significant digits so identical inputs give
/// byte-identical reports; parsing goes through nlohmann/json and maps
/// malformed input to precondition_error.

std::string format_double(double v);

std::string write_family(const QuadraticFamily& F);
QuadraticFamily load_family(const std::string& text);

std::string write_curves(const std::vector<DegeneracyCurve>& curves, int j);
std::vector<DegeneracyCurve> load_curves(const std::string& text);

std::string write_page(const E2Page& page, const std::vector<DifferentialEntry>& d2,
                       const std::vector<DifferentialEntry>& d3);

std::string write_link_result(const LinkResult& r);

std::string write_prop1_reports(const std::vector<Prop1Report>& reports);

std::string write_collapse(const CollapseReport& rep);

std::string write_lemma4(const Lemma4Report& rep);

std::string write_hopf_pipeline(const HopfPipelineResult& res);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace qf
