#pragma once

#include "sqfd/integer.hpp"
#include "sqfd/extbinom.hpp"
#include "sqfd/ideals.hpp"
#include "sqfd/hilbert.hpp"
#include "sqfd/verify.hpp"
#include "sqfd/report.hpp"
