#pragma once

#include "slinf/classify.hpp"
#include "slinf/errors.hpp"
#include "slinf/finrep.hpp"
#include "slinf/modmodel.hpp"
#include "slinf/oracle.hpp"
#include "slinf/orders.hpp"
#include "slinf/serialize.hpp"
#include "slinf/weights.hpp"
