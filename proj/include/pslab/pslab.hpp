#pragma once

// Umbrella header: exact counting of primes in intersections of
// Piatetski-Shapiro sets, the asymptotic main term, and numerical checkers
// for the exponential-sum toolbox behind the asymptotics.

#include "pslab/accum.hpp"
#include "pslab/base.hpp"
#include "pslab/bilinear.hpp"
#include "pslab/bprocess.hpp"
#include "pslab/case4.hpp"
#include "pslab/config.hpp"
#include "pslab/count.hpp"
#include "pslab/doubledouble.hpp"
#include "pslab/heath_brown.hpp"
#include "pslab/integer_root.hpp"
#include "pslab/lemma_report.hpp"
#include "pslab/lemmas.hpp"
#include "pslab/parallel.hpp"
#include "pslab/phase.hpp"
#include "pslab/ps_set.hpp"
#include "pslab/quadrature.hpp"
#include "pslab/rational.hpp"
#include "pslab/scalar.hpp"
#include "pslab/sieve.hpp"
