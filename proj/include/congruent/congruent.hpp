#pragma once

#include "congruent/circumcircle.hpp"
#include "congruent/ellipse.hpp"
#include "congruent/errors.hpp"
#include "congruent/excircle.hpp"
#include "congruent/rational.hpp"
#include "congruent/records.hpp"
#include "congruent/squarefree.hpp"
#include "congruent/tables.hpp"
#include "congruent/tau_curve.hpp"
#include "congruent/triangle.hpp"
