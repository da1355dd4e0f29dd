#pragma once

#include "belsf/bel.hpp"
#include "belsf/conway.hpp"
#include "belsf/errors.hpp"
#include "belsf/gf.hpp"
#include "belsf/gtf.hpp"
#include "belsf/io.hpp"
#include "belsf/isotopy.hpp"
#include "belsf/linpoly.hpp"
#include "belsf/matrix.hpp"
#include "belsf/parallel.hpp"
#include "belsf/random.hpp"
#include "belsf/rank2.hpp"
#include "belsf/semifield.hpp"
