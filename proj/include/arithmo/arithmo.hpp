#pragma once

#include "arithmo/arithfn.hpp"
#include "arithmo/dirichlet.hpp"
#include "arithmo/errors.hpp"
#include "arithmo/factorint.hpp"
#include "arithmo/identities.hpp"
#include "arithmo/qvalue.hpp"
#include "arithmo/report_io.hpp"
