#include "updag/oracles.hpp"
#include "updag/planarity.hpp"
