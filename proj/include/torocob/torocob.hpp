#ifndef TOROCOB_TOROCOB_HPP
#define TOROCOB_TOROCOB_HPP

#include "charfun.hpp"
#include "cobordism.hpp"
#include "corners.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "json_core.hpp"
#include "json_io.hpp"
#include "lattice.hpp"
#include "report.hpp"

#endif
