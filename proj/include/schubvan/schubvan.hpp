#pragma once

#include "schubvan/errors.hpp"
#include "schubvan/lift.hpp"
#include "schubvan/modular.hpp"
#include "schubvan/permutation.hpp"
#include "schubvan/polynomial.hpp"
#include "schubvan/polysys.hpp"
#include "schubvan/purbhoo.hpp"
#include "schubvan/schubert.hpp"
#include "schubvan/selftest.hpp"
