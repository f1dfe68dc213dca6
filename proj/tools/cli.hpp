#ifndef RSG_TOOLS_CLI_HPP
#define RSG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rsg::cli {

  inline constexpr int exit_ok       = 0;
  inline constexpr int exit_false    = 1;  // a checked property fails
  inline constexpr int exit_input    = 2;  // malformed input or usage
  inline constexpr int exit_resource = 3;  // enumeration bound hit

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace rsg::cli

#endif  // RSG_TOOLS_CLI_HPP
