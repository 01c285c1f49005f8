#pragma once

#include "osculate/binomial.hpp"
#include "osculate/commands.hpp"
#include "osculate/core.hpp"
#include "osculate/error.hpp"
#include "osculate/evaluate.hpp"
#include "osculate/io.hpp"
#include "osculate/jet.hpp"
#include "osculate/matrix.hpp"
#include "osculate/oracle.hpp"
