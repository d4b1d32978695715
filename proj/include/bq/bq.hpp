#pragma once

#include "bq/alexander.hpp"
#include "bq/braid.hpp"
#include "bq/error.hpp"
#include "bq/finite_biquandle.hpp"
#include "bq/laurent.hpp"
#include "bq/matrix.hpp"
#include "bq/morphism.hpp"
#include "bq/moves.hpp"
#include "bq/quaternion.hpp"
#include "bq/quaternionic.hpp"
#include "bq/term.hpp"
