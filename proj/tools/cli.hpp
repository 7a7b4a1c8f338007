#ifndef OMX_TOOLS_CLI_HPP
#define OMX_TOOLS_CLI_HPP

#include "omx/om.hpp"
#include "omx/realize.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace omx::cli {

enum ExitCode : int { success = 0, check_failed = 1, usage_error = 2 };

/// Raised for unreadable or malformed input; maps to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Either file format, after loading.
struct LoadedInput {
  std::string name;
  std::optional<Arrangement> arrangement;
  std::vector<std::string> elements;
  std::vector<SignVector> cocircuits;
  std::optional<std::size_t> g;
};

/// Arrangement JSON {name, dimension, vectors, g} or OM JSON
/// {name?, elements, g?, cocircuits}.
LoadedInput parse_input(const nlohmann::ordered_json& j, const std::string& fallback_name);
LoadedInput load_input(const std::string& path);

/// Oriented matroid of the input; validated. Throws InputError.
OrientedMatroid load_om(const LoadedInput& in);
/// Throws InputError when the input has no g.
AffineOM load_affine(const LoadedInput& in, bool allow_loop_g);

nlohmann::ordered_json om_json(const std::string& name, const OrientedMatroid& m, std::optional<std::size_t> g);

/// Runs one command line (without the program name). Output JSON goes to
/// `out` unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omx::cli

#endif
