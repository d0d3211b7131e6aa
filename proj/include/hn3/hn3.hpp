#pragma once

#include "hn3/connections.hpp"
#include "hn3/errors.hpp"
#include "hn3/io.hpp"
#include "hn3/lie.hpp"
#include "hn3/matrix.hpp"
#include "hn3/nijenhuis.hpp"
#include "hn3/report.hpp"
#include "hn3/scalar.hpp"
#include "hn3/structures.hpp"
#include "hn3/tensor.hpp"
