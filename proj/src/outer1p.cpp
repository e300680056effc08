#include "updag/outer1p.hpp"
