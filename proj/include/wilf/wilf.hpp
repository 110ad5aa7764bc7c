#pragma once

#include "wilf/bernoulli.hpp"
#include "wilf/bigfloat.hpp"
#include "wilf/cache.hpp"
#include "wilf/cyclo.hpp"
#include "wilf/dedekind.hpp"
#include "wilf/errors.hpp"
#include "wilf/fq_poly.hpp"
#include "wilf/granville.hpp"
#include "wilf/int_poly.hpp"
#include "wilf/modular.hpp"
#include "wilf/numeric_poly.hpp"
#include "wilf/parallel.hpp"
#include "wilf/period.hpp"
#include "wilf/primes.hpp"
#include "wilf/rational.hpp"
#include "wilf/version.hpp"
#include "wilf/wieferich.hpp"
