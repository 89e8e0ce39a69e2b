#ifndef SLCDUAL_IO_HPP
#define SLCDUAL_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "slcdual/construction.hpp"
#include "slcdual/gluing_data.hpp"
#include "slcdual/topology.hpp"

namespace slcdual {

struct UnknownExample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical datasets: pinch-point, x31-figure, x31-text, snc-triangle,
/// double-curve, loop-pair, folded-curve.
nlohmann::json builtin_example(const std::string& name);
std::vector<std::string> builtin_example_names();

nlohmann::json validation_json(const ValidationReport& report);

/// Full report: validation, Euler characteristic, homology, centers,
/// surface type, and cell counts.
nlohmann::json report_json(const SlcGluingData& data);
std::string report_text(const SlcGluingData& data);

nlohmann::json export_complex(const DualComplexResult& result);
CellComplex load_complex(const nlohmann::json& doc);

/// OFF file with cosmetic unit-sphere coordinates; faces a loop or a
/// repeated vertex cannot represent are dropped and counted in a
/// trailing comment.
std::string export_off(const DualComplexResult& result);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slcdual

#endif
