// cli.hpp — Command-line front end
//
//     dar rates  [physics flags]
//     dar evolve --model tls --t-max 100
//     dar fisher --theta eps_a --out fisher.csv
//     dar steady --theta omega0
//     dar sweep  config.txt --out data.csv --threads 4
//     dar figure fig1b --out fig1b.csv
//
// Exit codes: 0 success, 1 domain or configuration error, 2 usage error.
// Data goes to `out` (or --out), diagnostics to `err`.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dar::cli {

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dar::cli
