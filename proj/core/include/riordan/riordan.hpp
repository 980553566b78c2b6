#pragma once

#include "riordan/arrays.hpp"
#include "riordan/corpus.hpp"
#include "riordan/error.hpp"
#include "riordan/gf_expr.hpp"
#include "riordan/io.hpp"
#include "riordan/matrix.hpp"
#include "riordan/rational.hpp"
#include "riordan/sequences.hpp"
#include "riordan/series.hpp"
#include "riordan/tp.hpp"
#include "riordan/verify.hpp"
