#include "updag/planarity.hpp"
