#pragma once

// Exact computation of Groebner bases, border bases, and exhaustive
// enumerations of all order ideals and quasi order ideals, for vanishing
// ideals of finite point sets over Q or a prime field.

#include "borderbases/bm.hpp"
#include "borderbases/enumeration.hpp"
#include "borderbases/errors.hpp"
#include "borderbases/fg.hpp"
#include "borderbases/field.hpp"
#include "borderbases/generate.hpp"
#include "borderbases/io.hpp"
#include "borderbases/oracle.hpp"
#include "borderbases/order_ideal.hpp"
#include "borderbases/ordering.hpp"
#include "borderbases/point_set.hpp"
#include "borderbases/polynomial.hpp"
#include "borderbases/reduction_state.hpp"
#include "borderbases/term.hpp"
#include "borderbases/verify.hpp"
