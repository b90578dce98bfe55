#pragma once

#include "qmts/classicality.hpp"
#include "qmts/coherence.hpp"
#include "qmts/dephasing.hpp"
#include "qmts/dynamics.hpp"
#include "qmts/ensembles.hpp"
#include "qmts/errors.hpp"
#include "qmts/json_io.hpp"
#include "qmts/leggett_garg.hpp"
#include "qmts/multitime.hpp"
#include "qmts/operators.hpp"
#include "qmts/superoperator.hpp"
#include "qmts/types.hpp"
