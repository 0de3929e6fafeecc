#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rearrange {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rearrange
