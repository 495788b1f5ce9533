#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hafs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `hafs` invocation. `args` excludes the program name.
///
///   hafs check       <input>
///   hafs labellings  <input> [--semantics complete|grounded|preferred|stable]
///   hafs extensions  <input> [--semantics ...]
///   hafs encode      <input> [--logic l3] [--format text|json]
///   hafs eval        <input> --assignment <json> [--logic l3]
///   hafs solve       <input> [--logic godel] [--damping --tol --max-iter --restarts --seed] [--exact]
///   hafs verify      <input> --theorem T1[,T2...] [--logic godel] [--seed]
///   hafs random      --args N [--atts N] [--supps N] [--seed S] [--acyclic-supports] [--higher-order-prob p]
///
/// <input> is a file path, `-` for stdin, or `--text '<framework>'`.
/// HAFS_MAX_U, when set, replaces every enumeration size bound.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hafs::cli
