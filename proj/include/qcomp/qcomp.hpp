#pragma once

#include "qcomp/error.hpp"
#include "qcomp/order.hpp"
#include "qcomp/galois.hpp"
#include "qcomp/hilbert.hpp"
#include "qcomp/random.hpp"
#include "qcomp/density.hpp"
#include "qcomp/compound.hpp"
#include "qcomp/cascade.hpp"
#include "qcomp/quantale.hpp"
#include "qcomp/io.hpp"
#include "qcomp/suites.hpp"
