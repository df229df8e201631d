#ifndef SIGMACODE_SRC_RESOURCES_HPP
#define SIGMACODE_SRC_RESOURCES_HPP

#include <string_view>

namespace sigmacode::resources {

std::string_view moduli_table();
std::string_view bestknown_table();

}  // namespace sigmacode::resources

#endif
