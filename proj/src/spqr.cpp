#include "updag/spqr.hpp"
#include "updag/drawing.hpp"
