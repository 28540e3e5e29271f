#pragma once

#include <iosfwd>
#include <map>
#include <string>

namespace attrdq::cli {

/// Entry point shared by main() and the tests. Returns the process exit code:
/// 0 on success (including reports with findings), 2 on input or option errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Column name -> description. Lines are `name<TAB>description` or
/// `name: description`; blank lines and `#` comments are skipped.
std::map<std::string, std::string> load_descriptions(const std::string& path);

/// $ATTRDQ_DICT_DIR if set, otherwise the directory baked in at build time.
std::string default_dictionary_dir();

}  // namespace attrdq::cli
