#include <iostream>

#include "swcx/acceptance.hpp"

int main() { return swcx::run_acceptance(std::cout, {}) ? 0 : 1; }
