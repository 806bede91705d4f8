#pragma once

#include "logrank/bbr.hpp"
#include "logrank/bilinear.hpp"
#include "logrank/error.hpp"
#include "logrank/exactla.hpp"
#include "logrank/matrix.hpp"
#include "logrank/modcore.hpp"
#include "logrank/polynomial.hpp"
#include "logrank/protocol.hpp"
#include "logrank/representation.hpp"
