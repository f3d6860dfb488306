#ifndef SBI_CLI_HPP
#define SBI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sbi {

/* exit codes: 0 ok, 1 unit or improper result, 2 parse or usage error */
int run_cli(std::vector<std::string> const & args, std::istream & in, std::ostream & out, std::ostream & err);

}

#endif
