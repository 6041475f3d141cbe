#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/expression.hpp"
#include "hodgescreen/exact/matrix.hpp"
#include "hodgescreen/exact/mpoly.hpp"
#include "hodgescreen/exact/number_field.hpp"
#include "hodgescreen/exact/ratfunc.hpp"
#include "hodgescreen/flag/flag_point.hpp"
#include "hodgescreen/hodge/hodge_numbers.hpp"
#include "hodgescreen/hodge/realized.hpp"
#include "hodgescreen/invariants/cocharacter.hpp"
#include "hodgescreen/lie/mat_lie_algebra.hpp"
#include "hodgescreen/verdict/verdict.hpp"
