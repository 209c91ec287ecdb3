#ifndef EQSYM_EQSYM_HPP
#define EQSYM_EQSYM_HPP

#include "eqsym/ballot.hpp"
#include "eqsym/binomial.hpp"
#include "eqsym/caps.hpp"
#include "eqsym/errors.hpp"
#include "eqsym/harmonics.hpp"
#include "eqsym/ideal.hpp"
#include "eqsym/linalg.hpp"
#include "eqsym/monomial.hpp"
#include "eqsym/poly.hpp"
#include "eqsym/quasisym.hpp"
#include "eqsym/rational.hpp"
#include "eqsym/sym_coinv.hpp"
#include "eqsym/verify.hpp"

#endif
