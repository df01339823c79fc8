#pragma once

#include "crystal/cartan.hpp"
#include "crystal/elements.hpp"
#include "crystal/graph.hpp"
#include "crystal/json_io.hpp"
#include "crystal/monomial.hpp"
#include "crystal/tableau.hpp"
#include "crystal/xform_binf.hpp"
#include "crystal/xform_bla.hpp"
