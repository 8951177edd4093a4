#pragma once

#include "mlf/numerics/errors.hpp"
#include "mlf/numerics/gamma.hpp"
#include "mlf/numerics/quadrature.hpp"
#include "mlf/numerics/random.hpp"
#include "mlf/numerics/talbot.hpp"

#include "mlf/ml/asymptotic.hpp"
#include "mlf/ml/contour.hpp"
#include "mlf/ml/derived.hpp"
#include "mlf/ml/eval.hpp"
#include "mlf/ml/multi.hpp"
#include "mlf/ml/prabhakar.hpp"
#include "mlf/ml/series.hpp"
#include "mlf/ml/types.hpp"
#include "mlf/ml/wright.hpp"

#include "mlf/frac/ml_rules.hpp"
#include "mlf/frac/operators.hpp"

#include "mlf/prob/distributions.hpp"
#include "mlf/prob/process.hpp"
#include "mlf/prob/stats.hpp"

#include "mlf/kinetics/diffusion.hpp"
#include "mlf/kinetics/kinetic.hpp"
#include "mlf/kinetics/relaxation.hpp"
