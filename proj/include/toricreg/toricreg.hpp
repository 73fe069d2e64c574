#pragma once

#include "toricreg/enumerate.hpp"
#include "toricreg/error.hpp"
#include "toricreg/gotzmann.hpp"
#include "toricreg/hilbert.hpp"
#include "toricreg/hilbscheme.hpp"
#include "toricreg/index_set.hpp"
#include "toricreg/linalg.hpp"
#include "toricreg/monomial.hpp"
#include "toricreg/polynomial.hpp"
#include "toricreg/regularity.hpp"
#include "toricreg/stanley.hpp"
#include "toricreg/toric.hpp"
