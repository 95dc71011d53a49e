#pragma once

#include "pcard/strings.hpp"
#include "pcard/polynomial.hpp"
#include "pcard/clock.hpp"
#include "pcard/language.hpp"
#include "pcard/witness.hpp"
#include "pcard/cantor_bernstein.hpp"
#include "pcard/ranking.hpp"
#include "pcard/findiff.hpp"
#include "pcard/iso_tools.hpp"
#include "pcard/choice.hpp"
#include "pcard/diag.hpp"
#include "pcard/dsl.hpp"
